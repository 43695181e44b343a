#pragma once

// Finitely presented graded *-algebras: generator tables, directed rewrite
// rules, the normal-form engine, and the Element value type.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "suq2/scalar.hpp"

namespace suq2 {

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Letter = std::uint8_t;
using Word = std::vector<Letter>;

/// Degree-lexicographic order: shorter words first, then lexicographic on
/// generator indices. This is the termination order for every rule set.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Finite formal sum of words with nonzero Scalar coefficients.
using LinComb = std::map<Word, Scalar, WordLess>;

void add_term(LinComb& acc, const Word& w, const Scalar& c);
void add_scaled(LinComb& acc, const LinComb& x, const Scalar& c);
Word concat(const Word& a, const Word& b);

struct Generator {
  std::string name;    // ASCII name used by the CLI grammar, e.g. "g'" or "j2(a)"
  std::string pretty;  // Unicode name, e.g. "γ*"
  int degree = 0;
  int adjoint = 0;  // index of the adjoint partner
  int leg = 1;
};

struct RewriteRule {
  Word lhs;  // one or two letters
  LinComb rhs;
};

class Presentation;
using PresentationPtr = std::shared_ptr<const Presentation>;

/// Raw ingredients of a presentation, before validation and interning.
struct PresentationData {
  std::string name;
  std::vector<Generator> generators;
  std::vector<RewriteRule> rules;
  std::optional<Scalar> parameter;
  /// Product structure: base factors in leg order (empty for a base algebra)
  /// and the symmetric twist table between legs.
  std::vector<PresentationPtr> factors;
  std::vector<std::vector<Scalar>> twists;
};

/// Immutable, interned presentation. Two presentations with the same
/// generators and rules are the same object, so identity comparison is
/// structural comparison.
class Presentation {
 public:
  /// Validates (adjoint involution, degree compatibility, and unless
  /// `check_termination` is false, that every rule decreases WordLess) and
  /// interns the presentation.
  static PresentationPtr make(PresentationData data, bool check_termination = true);

  const std::string& name() const { return data_.name; }
  const std::vector<Generator>& generators() const { return data_.generators; }
  const Generator& generator(int i) const { return data_.generators.at(i); }
  std::size_t size() const { return data_.generators.size(); }
  const std::vector<RewriteRule>& rules() const { return data_.rules; }
  const std::optional<Scalar>& parameter() const { return data_.parameter; }
  /// zeta = q / conj(q) for the parameter q; 1 when there is no parameter.
  Scalar natural_zeta() const;

  bool is_product() const { return !data_.factors.empty(); }
  /// Number of legs (1 for a base algebra).
  int leg_count() const { return is_product() ? static_cast<int>(data_.factors.size()) : 1; }
  const std::vector<PresentationPtr>& factors() const { return data_.factors; }
  /// Base factor of a leg (1-based); for a base algebra leg 1 is the algebra itself.
  PresentationPtr factor(int leg) const;
  const Scalar& twist(int leg_i, int leg_j) const;
  const std::vector<std::vector<Scalar>>& twists() const { return data_.twists; }
  /// Index of the first generator of a leg (1-based legs).
  int leg_offset(int leg) const;

  bool terminating() const { return terminating_; }

  /// Generator index by ASCII name, or -1.
  int find_generator(std::string_view name) const;

  const RewriteRule* rule_for(Letter a) const;
  const RewriteRule* rule_for(Letter a, Letter b) const;
  bool is_normal(const Word& w) const;
  /// Positions of every redex in w with the rule index applying there.
  std::vector<std::pair<std::size_t, int>> redexes(const Word& w) const;

  /// Normal form of u*v for u normal and v arbitrary.
  LinComb multiply(const Word& u, const Word& v) const;
  /// Normal form of an arbitrary raw sum.
  LinComb normal_form(const LinComb& raw) const;

  int word_degree(const Word& w) const;
  std::string word_to_string(const Word& w, bool unicode = false) const;

  /// Structural fingerprint used for interning.
  const std::string& signature() const { return signature_; }

  PresentationPtr self() const { return self_.lock(); }

 private:
  explicit Presentation(PresentationData data);
  LinComb multiply_letter(const Word& u, Letter x) const;
  LinComb multiply_lincomb(const Word& u, const LinComb& rhs) const;

  PresentationData data_;
  std::vector<int> unary_rule_;               // per letter, -1 if none
  std::vector<std::vector<int>> binary_rule_;  // [a][b], -1 if none
  bool terminating_ = false;
  std::string signature_;
  std::weak_ptr<const Presentation> self_;

  struct WordHash {
    std::size_t operator()(const Word& w) const noexcept {
      return std::hash<std::string_view>{}(
          std::string_view(reinterpret_cast<const char*>(w.data()), w.size()));
    }
  };
  mutable std::mutex memo_mutex_;
  mutable std::unordered_map<Word, LinComb, WordHash> memo_;
};

/// Globally disables/enables the reduction memo table. Results never depend
/// on this switch.
void set_reduction_memo(bool enabled);
bool reduction_memo_enabled();

/// Answer of degree(): homogeneous of some degree, the zero element, or
/// inhomogeneous.
struct Degree {
  enum class Kind { homogeneous, zero, inhomogeneous };
  Kind kind = Kind::zero;
  int value = 0;

  static Degree of(int d) { return {Kind::homogeneous, d}; }
  static Degree zero() { return {Kind::zero, 0}; }
  static Degree inhomogeneous() { return {Kind::inhomogeneous, 0}; }
  bool is_homogeneous() const { return kind == Kind::homogeneous; }
  friend bool operator==(const Degree&, const Degree&) = default;
  std::string to_string() const;
};

/// Normalized element of a presented algebra.
class Element {
 public:
  explicit Element(PresentationPtr p) : pres_(std::move(p)) {}
  /// Normalizes `raw` in `p`.
  Element(PresentationPtr p, const LinComb& raw);

  static Element unit(PresentationPtr p) { return scalar(std::move(p), Scalar(1)); }
  static Element scalar(PresentationPtr p, const Scalar& c);
  static Element generator(PresentationPtr p, int index);
  static Element generator(PresentationPtr p, std::string_view name);
  static Element word(PresentationPtr p, const Word& w, const Scalar& c = Scalar(1));

  const PresentationPtr& presentation() const { return pres_; }
  const LinComb& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True when the element is c*1 for some Scalar c; sets *c.
  bool is_scalar(Scalar* c = nullptr) const;

  Degree degree() const;
  Element homogeneous_component(int d) const;
  std::map<int, Element> components() const;

  Element adjoint() const;
  Element scaled(const Scalar& c) const;

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator-(const Element& a);
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator*(const Scalar& c, const Element& a) { return a.scaled(c); }
  Element& operator+=(const Element& b) { return *this = *this + b; }
  Element& operator-=(const Element& b) { return *this = *this - b; }
  Element& operator*=(const Element& b) { return *this = *this * b; }
  friend bool operator==(const Element& a, const Element& b);

  std::string to_string(bool unicode = false) const;

 private:
  static Element from_normal(PresentationPtr p, LinComb terms);
  void require_same(const Element& other) const;

  PresentationPtr pres_;
  LinComb terms_;
};

/// Power x^n for n >= 0.
Element power(const Element& x, int n);

/// Word-level adjoint: reverse, star each letter, conjugate coefficients.
LinComb raw_adjoint(const Presentation& p, const LinComb& x);

// ---------------------------------------------------------------------------
// Base presentations

/// SU_q(2): generators g, g', a, a' (gamma, gamma*, alpha, alpha*) with
/// degrees 1, -1, 0, 0 and the seven directed relations.
PresentationPtr suq2_presentation(const Scalar& q = Scalar::q());
/// Quantum torus on unitaries U, V with UV = zeta VU.
PresentationPtr torus_presentation(const Scalar& zeta = Scalar::zeta());
/// U_q(2): SU_q(2) plus a unitary z with z a z* = a, z g z* = zeta^{-1} g.
PresentationPtr uq2_presentation(const Scalar& q = Scalar::q());
/// Free graded *-algebra on the given (name, degree) generators, each paired
/// with a starred partner of opposite degree; no relations.
PresentationPtr free_presentation(const std::string& name, const std::vector<std::pair<std::string, int>>& gens);

// ---------------------------------------------------------------------------
// Confluence

enum class Strategy { leftmost, random };

/// Reduces a raw sum by repeatedly applying rules (leftmost redex of the
/// first pending word, or uniformly random pending word and redex). Returns
/// nullopt when more than `budget` rewrite steps are needed.
std::optional<LinComb> reduce_by_rules(const Presentation& p, LinComb raw, Strategy strategy,
                                       std::mt19937_64* rng = nullptr, std::size_t budget = 20000);

struct Divergence {
  Word word;
  std::string detail;
};

struct ConfluenceReport {
  std::size_t critical_pairs = 0;
  std::size_t exhaustive_words = 0;
  std::size_t random_trials = 0;
  std::vector<Divergence> divergences;
  bool pass() const { return divergences.empty(); }
};

/// (a) all rule overlaps of length <= maxlen plus every word of length <=
/// maxlen with at least two redexes: every first rewrite step leads to the
/// same normal form; (b) `trials` random words of length <= maxlen reduced
/// under randomized rule order agree with the canonical normal form.
ConfluenceReport confluence_check(const PresentationPtr& p, int maxlen, int trials, std::uint64_t seed);

}  // namespace suq2
