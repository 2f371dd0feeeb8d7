#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polyaut {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// group construction / validation
struct NonAssociativeTable : Error {
  using Error::Error;
};
struct NoIdentity : Error {
  using Error::Error;
};
struct MissingInverse : Error {
  using Error::Error;
};
struct ClosureOverflow : Error {
  using Error::Error;
};
struct NotNormal : Error {
  using Error::Error;
};

// polynomial-automorphism engine
struct SearchBudgetExceeded : Error {
  using Error::Error;
};
struct ClosureBudgetExceeded : Error {
  ClosureBudgetExceeded(std::size_t partial, const std::string& msg)
      : Error(msg), partial_size(partial) {}
  std::size_t partial_size;
};
struct ConjugatesDoNotCommute : Error {
  ConjugatesDoNotCommute(int t_, const std::string& msg) : Error(msg), t(t_) {}
  int t;
};
struct PreconditionNotMet : Error {
  PreconditionNotMet(std::string claim_, std::string reason_)
      : Error("precondition not met for " + claim_ + ": " + reason_),
        claim(std::move(claim_)),
        reason(std::move(reason_)) {}
  std::string claim;
  std::string reason;
};

// free-metabelian engine
struct RankMismatch : Error {
  using Error::Error;
};
struct NotDerived : Error {
  using Error::Error;
};
struct ExactDivisionFailed : Error {
  using Error::Error;
};
struct NotMetabelian : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

// CLI
struct UnknownGroup : Error {
  using Error::Error;
};
struct UnknownClaim : Error {
  using Error::Error;
};

}  // namespace polyaut
