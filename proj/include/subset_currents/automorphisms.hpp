#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "subset_currents/rational.hpp"
#include "subset_currents/subgroups.hpp"
#include "subset_currents/words.hpp"

namespace subset_currents {

/// Elementary Nielsen move acting on the tuple of basis images (1-based
/// indices; a negative j stands for the inverse of x_|j|):
///   L i j: x_i <- x_j x_i     R i j: x_i <- x_i x_j
///   I i:   x_i <- x_i^-1      P i j: swap x_i and x_j
struct NielsenMove {
  enum class Kind { Left, Right, Invert, Swap };
  Kind kind = Kind::Invert;
  int i = 1;
  int j = 0;

  NielsenMove inverse() const;
  std::string to_string() const;
  friend bool operator==(const NielsenMove&, const NielsenMove&) = default;
};

/// Whether the words generate F_N.
bool validate(const std::vector<Word>& images);

class Automorphism {
 public:
  /// Throws std::invalid_argument unless the images form a generating set of
  /// exactly N words.
  static Automorphism from_images(std::vector<Word> images);
  /// Composite of the moves applied to the tuple of basis images in order.
  static Automorphism from_nielsen(const std::vector<NielsenMove>& moves, int rank);
  static Automorphism identity(int rank);

  int rank() const { return static_cast<int>(images_.size()); }
  const std::vector<Word>& images() const { return images_; }
  const Word& image(Letter x) const { return images_[std::abs(x) - 1]; }
  const std::optional<std::vector<NielsenMove>>& moves() const { return moves_; }

  Word apply(const Word& w) const;
  Subgroup apply(const Subgroup& h) const;

  /// Inverse via the Nielsen decomposition; throws std::logic_error for
  /// automorphisms given by raw images.
  Automorphism inverse() const;

  /// "a->ab; b->b" for N <= 26, JSON-like arrays otherwise.
  std::string to_string() const;

 private:
  Automorphism(std::vector<Word> images, std::optional<std::vector<NielsenMove>> moves)
      : images_(std::move(images)), moves_(std::move(moves)) {}

  std::vector<Word> images_;
  std::optional<std::vector<NielsenMove>> moves_;
};

/// (phi o psi)(w) = phi(psi(w)).
Automorphism compose(const Automorphism& phi, const Automorphism& psi);

/// Conjugation w -> g w g^-1.
Automorphism inner(const Word& g);

/// Accepts "a->ab; b->b" (letters not mentioned map to themselves) or
/// "nielsen: L12, I1, P12" (also "L1-2", "L10:3").
Automorphism parse_automorphism(std::string_view text, int rank);

struct InvarianceReport {
  int rank_before = 0, rank_after = 0;
  std::optional<int> index_before, index_after;
  Rational rrk_before, rrk_after;
  bool full_group = false;
  int classes_compared = 0;
  bool weights_equal = true;

  bool ok() const {
    return rank_before == rank_after && index_before == index_after && rrk_before == rrk_after &&
           weights_equal;
  }
};

/// Compares h with phi(h); for the full group also compares counting-current
/// weights on all classes with at most max_edges edges.
InvarianceReport invariance_report(const Automorphism& phi, const Subgroup& h, int max_edges = 5);

}  // namespace subset_currents
