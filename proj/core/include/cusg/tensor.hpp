#pragma once

#include "cusg/completion.hpp"
#include "cusg/finpom.hpp"
#include "cusg/rational.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cusg {

using Code = std::int64_t;

// A positively ordered monoid whose elements are encoded as integers. Search routines
// only ever generate elements from universe(); add may leave it.
class Carrier {
 public:
  virtual ~Carrier() = default;
  virtual std::string label() const = 0;
  virtual Code zero() const = 0;
  virtual Code add(Code x, Code y) const = 0;
  virtual bool leq(Code x, Code y) const = 0;
  virtual bool valid(Code x) const = 0;
  // Nonzero elements available to the search, in increasing code order.
  virtual const std::vector<Code>& universe() const = 0;
  // True when universe() is every nonzero element.
  virtual bool finite() const = 0;
  virtual std::string show(Code x) const = 0;
  virtual std::optional<Code> parse(std::string_view s) const = 0;

  bool is_zero(Code x) const { return x == zero(); }
};

class FinPomCarrier final : public Carrier {
 public:
  explicit FinPomCarrier(FinPom m);
  std::string label() const override { return label_; }
  Code zero() const override { return m_.zero; }
  Code add(Code x, Code y) const override { return m_.sum(static_cast<int>(x), static_cast<int>(y)); }
  bool leq(Code x, Code y) const override { return m_.le(static_cast<int>(x), static_cast<int>(y)); }
  bool valid(Code x) const override { return x >= 0 && x < m_.n; }
  const std::vector<Code>& universe() const override { return universe_; }
  bool finite() const override { return true; }
  std::string show(Code x) const override { return m_.name(static_cast<int>(x)); }
  std::optional<Code> parse(std::string_view s) const override;
  const FinPom& pom() const { return m_; }
  void set_label(std::string l) { label_ = std::move(l); }

 private:
  FinPom m_;
  std::vector<Code> universe_;
  std::string label_ = "finpom";
};

// Positive cone of (1/D)ℤ × ℤ/N: elements (num/D, τ) with num > 0, plus zero.
// Order: equal, or strictly smaller rational part. Covers ℕ (D = N = 1), K_q truncations
// and the compact part of torsion GenSolid rings.
class GridCarrier final : public Carrier {
 public:
  GridCarrier(std::int64_t denominator, std::int64_t torsion, std::int64_t cap);
  static GridCarrier naturals(std::int64_t cap) { return GridCarrier(1, 1, cap); }

  std::string label() const override;
  Code zero() const override { return 0; }
  Code add(Code x, Code y) const override;
  bool leq(Code x, Code y) const override;
  bool valid(Code x) const override;
  const std::vector<Code>& universe() const override { return universe_; }
  bool finite() const override { return false; }
  std::string show(Code x) const override;
  std::optional<Code> parse(std::string_view s) const override;

  Code encode(std::int64_t num, std::int64_t tau) const;
  std::int64_t num(Code x) const { return x / N_; }
  std::int64_t tau(Code x) const { return x % N_; }
  std::int64_t denominator() const { return D_; }
  std::int64_t torsion() const { return N_; }

 private:
  std::int64_t D_, N_, cap_;
  std::vector<Code> universe_;
};

using Term = std::pair<Code, Code>;
// Sorted multiset of simple tensors. Canonical sums contain no zero coordinates.
using FormalSum = std::vector<Term>;

FormalSum canonical(const Carrier& M, const Carrier& N, FormalSum f);
std::string show_sum(const Carrier& M, const Carrier& N, const FormalSum& f);
// "a@b + c@d"; "0" is the empty sum. Throws InputError.
FormalSum parse_sum(const Carrier& M, const Carrier& N, std::string_view s);

enum class StepKind { SplitLeft, SplitRight, MergeLeft, MergeRight, Relax, ZeroAbsorb };
const char* to_string(StepKind k);

struct Step {
  StepKind kind = StepKind::Relax;
  // Positions in the (sorted) state the step is applied to. Relax with no position inserts.
  std::vector<int> positions;
  // Split: the parts. Relax: the new term.
  std::vector<Code> parts;
  Term term{0, 0};
};
using Certificate = std::vector<Step>;

// Applies one step to a sorted state; nullopt if the step does not instantiate its relation.
std::optional<FormalSum> apply_step(const Carrier& M, const Carrier& N, const FormalSum& state,
                                    const Step& s, std::string* error = nullptr);
// Replays from sort(source) and compares with canonical(target).
bool replay(const Carrier& M, const Carrier& N, const FormalSum& source, const FormalSum& target,
            const Certificate& cert, std::string* error = nullptr);
// True when every step is a split, merge or zero-absorb, i.e. the chain proves ≅.
bool is_equivalence(const Certificate& cert);
std::string serialize(const Carrier& M, const Carrier& N, const Certificate& cert);
Certificate parse_certificate(const Carrier& M, const Carrier& N, std::string_view text);

struct SearchOptions {
  int depth = 12;
  int size_bound = 8;
  std::size_t max_states = 400000;
};

struct TensorVerdict {
  enum class Status { Yes, No, Unknown };
  Status status = Status::Unknown;
  Certificate certificate;
  int depth = 0;
  std::size_t frontier = 0;
  std::string note;
};
const char* to_string(TensorVerdict::Status s);

// f ≤ g in M⊗N (ordered tensor product of positively ordered monoids).
TensorVerdict tensor_leq(const Carrier& M, const Carrier& N, const FormalSum& f, const FormalSum& g,
                         const SearchOptions& opt = {});
// f ≅ g using only splits and merges.
TensorVerdict tensor_equiv(const Carrier& M, const Carrier& N, const FormalSum& f, const FormalSum& g,
                           const SearchOptions& opt = {});

// f ⋖ g for FinW factors satisfying W1, W3, W4.
TensorVerdict tensor_auxrel(const FinW& M, const FinW& N, const FormalSum& f, const FormalSum& g,
                            const SearchOptions& opt = {});

struct Saturation {
  bool ok = false;
  std::string diagnostics;
  FinPrePom prepom;           // ≅-classes with the induced pre-order
  FinPom pom;                 // its antisymmetrization: the POM tensor product
  std::vector<int> pre_to_pom;
  std::vector<FormalSum> reps;  // minimal representative per ≅-class
  std::vector<Term> generators;
  std::vector<std::vector<int>> act;  // act[class][generator]

  // Class of a sum whose terms are generators; throws InputError otherwise.
  int class_of(const FormalSum& f) const;
  // Same, in the antisymmetrized pom.
  int element_of(const FormalSum& f) const { return pre_to_pom[class_of(f)]; }
};

// Enumerates ≅-classes of sums over universe pairs and certifies them through the
// universal property: the class action of generators must be well defined on every
// enumerated sum, commute, and respect biadditivity.
Saturation tensor_saturate(const Carrier& M, const Carrier& N, int size_bound = 8,
                           std::size_t max_sums = 3'000'000);
Saturation tensor_saturate(const FinPom& M, const FinPom& N, int size_bound = 8);

// Map between saturated tensor products induced by morphisms f: M → M', g: N → N'.
std::vector<int> tensor_map(const Saturation& src, const Saturation& dst,
                            const std::vector<int>& f, const std::vector<int>& g);

// M, N algebraically ordered ⇒ M⊗N algebraically ordered, and Cu(M)⊗Cu(N) ≅ Cu(M⊗N).
Verdict tensor_algebraic_check(const FinPom& M, const FinPom& N, int size_bound = 8);

}  // namespace cusg
