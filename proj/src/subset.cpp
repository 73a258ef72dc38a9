#include "shatter/subset.hpp"

namespace shatter {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::GroundMismatch: return "GroundMismatch";
    case Errc::PatternNotInSupport: return "PatternNotInSupport";
    case Errc::NotAntichain: return "NotAntichain";
    case Errc::NotExtremal: return "NotExtremal";
    case Errc::FullFamily: return "FullFamily";
    case Errc::AmbiguousMissing: return "AmbiguousMissing";
    case Errc::EmptyList: return "EmptyList";
    case Errc::TooManyMembers: return "TooManyMembers";
    case Errc::NotComplete: return "NotComplete";
    case Errc::EmptySystem: return "EmptySystem";
    case Errc::WitnessNotEligible: return "WitnessNotEligible";
    case Errc::NotExtremalInput: return "NotExtremalInput";
    case Errc::EmptyFamily: return "EmptyFamily";
    case Errc::TooLarge: return "TooLarge";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::InfiniteStaircase: return "InfiniteStaircase";
    case Errc::ParseError: return "ParseError";
    case Errc::VerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

Subset Subset::of(std::initializer_list<int> elements) {
  return of(std::vector<int>(elements));
}

Subset Subset::of(const std::vector<int>& elements) {
  std::uint32_t bits = 0;
  for (int e : elements) {
    if (e < 1 || e > kMaxGround) {
      throw Error(Errc::InvalidArgument, "element " + std::to_string(e) + " outside 1.." +
                                             std::to_string(kMaxGround));
    }
    bits |= 1u << (e - 1);
  }
  return Subset(bits);
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

std::string Subset::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int e : elements()) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

GroundSet::GroundSet(int n) : n_(n) {
  if (n < 0 || n > kMaxGround) {
    throw Error(Errc::TooLarge, "ground set size n=" + std::to_string(n) + " outside 0.." +
                                    std::to_string(kMaxGround));
  }
}

void GroundSet::validate(Subset s) const {
  if (!valid(s)) {
    throw Error(Errc::InvalidArgument, "set " + s.to_string() + " not contained in [" + std::to_string(n_) + "]");
  }
}

}  // namespace shatter
