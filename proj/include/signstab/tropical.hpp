#pragma once

// Tropical X-points, the signed piecewise-linear mutation, sign sequences and
// presentation matrices.

#include <string>
#include <string_view>
#include <vector>

#include "signstab/seed.hpp"

namespace signstab {

/// Coordinates indexed by unfrozen position of the ambient seed.
using TropPoint = std::vector<Scalar>;

/// One entry per flip of a path.
using SignSeq = std::vector<Sign>;

/// Rendering without separators, e.g. "++-0".
std::string to_string(const SignSeq& s);
/// Rendering with separators, e.g. "(+,+,-,0)".
std::string to_display_string(const SignSeq& s);
/// Accepts "++-", "+,+,-", "(+, +, -)" and "[+ + -]".
SignSeq parse_sign_seq(std::string_view text);

bool is_strict(const SignSeq& s);
/// a <= b: a is obtained from b by zeroing some strict entries.
bool sign_leq(const SignSeq& a, const SignSeq& b);
inline bool sign_geq(const SignSeq& a, const SignSeq& b) { return sign_leq(b, a); }
/// Every strict sequence >= s, in lexicographic order with '+' first.
std::vector<SignSeq> strict_completions(const SignSeq& s);

class NonStrictSign : public Error {
 public:
  explicit NonStrictSign(std::vector<std::size_t> positions);
  const std::vector<std::size_t>& positions() const { return positions_; }

 private:
  std::vector<std::size_t> positions_;
};

TropPoint trop_mutate(const Seed& seed, std::size_t k, const TropPoint& w);
/// x'_{sigma(i)} = x_i on unfrozen positions.
TropPoint trop_permute(const Seed& seed, const Permutation& sigma, const TropPoint& w);

struct Transport {
  TropPoint final;
  /// The point just before each step.
  std::vector<TropPoint> intermediates;
};

Transport transport(const MutationPath& path, const TropPoint& w);
SignSeq sign_of_path(const MutationPath& path, const TropPoint& w);

/// The linear branch of trop_mutate on {sgn(x_k) = eps}.
IntMatrix edge_matrix(const Seed& seed, std::size_t k, Sign eps);
/// Product of edge and permutation matrices in application order.
IntMatrix presentation_matrix_for_sign(const MutationPath& path, const SignSeq& eps);
/// Throws NonStrictSign when the point lies on a wall.
IntMatrix presentation_matrix_at_point(const MutationPath& path, const TropPoint& w);

TropPoint scaled(const TropPoint& w, const Scalar& s);
std::string to_string(const TropPoint& w);

}  // namespace signstab
