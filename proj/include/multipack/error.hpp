#pragma once

#include <stdexcept>
#include <string>

namespace multipack {

enum class Errc {
  DisconnectedGraph,
  SelfLoop,
  DuplicateEdge,
  IdOutOfRange,
  TrivialGraph,
  HorizonOutOfRange,
  InvalidPermutation,
  InvalidOrdering,
  NonPositiveWeight,
  NotATree,
  NotPeripheral,
  NotDominating,
  ParamOutOfRange,
  EdgeNotOnPath,
  ResourceLimit,
  Infeasible,
  Internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

}  // namespace multipack
