#include "liecert/rational.hpp"

namespace liecert {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::EmptyGenerators: return "EmptyGenerators";
    case ErrorCode::NotInSpan: return "NotInSpan";
    case ErrorCode::DegenerateForm: return "DegenerateForm";
    case ErrorCode::NotSublattice: return "NotSublattice";
    case ErrorCode::UnsupportedRank: return "UnsupportedRank";
    case ErrorCode::NotARoot: return "NotARoot";
    case ErrorCode::OrbitCapExceeded: return "OrbitCapExceeded";
    case ErrorCode::TransversalIncomplete: return "TransversalIncomplete";
    case ErrorCode::PairingTooLarge: return "PairingTooLarge";
    case ErrorCode::ZeroCocharacter: return "ZeroCocharacter";
    case ErrorCode::DecompositionNotFound: return "DecompositionNotFound";
    case ErrorCode::Inapplicable: return "Inapplicable";
    case ErrorCode::NoReversor: return "NoReversor";
    case ErrorCode::EmptyRepresentation: return "EmptyRepresentation";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotProper: return "NotProper";
    case ErrorCode::UsageError: return "UsageError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw Error(ErrorCode::UsageError, "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw Error(ErrorCode::UsageError, "empty rational literal");
  std::string::size_type slash = s.find('/');
  Int num, den = 1;
  std::string np = (slash == std::string::npos) ? s : s.substr(0, slash);
  if (mpz_set_str(num.get_mpz_t(), np.c_str(), 10) != 0)
    throw Error(ErrorCode::UsageError, "bad rational literal '" + s + "'");
  if (slash != std::string::npos) {
    std::string dp = s.substr(slash + 1);
    if (dp.empty() || mpz_set_str(den.get_mpz_t(), dp.c_str(), 10) != 0)
      throw Error(ErrorCode::UsageError, "bad rational literal '" + s + "'");
  }
  return make_rat(num, den);
}

std::string rat_str(const Rat& r) { return r.get_str(); }

bool is_integer(const Rat& r) { return r.get_den() == 1; }

Int floor_rat(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

Int ceil_rat(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

}  // namespace liecert
