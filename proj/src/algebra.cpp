#include "suq2/algebra.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>

namespace suq2 {

void add_term(LinComb& acc, const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

void add_scaled(LinComb& acc, const LinComb& x, const Scalar& c) {
  if (c.is_zero()) return;
  const bool unit = c.is_one();
  for (const auto& [w, v] : x) add_term(acc, w, unit ? v : v * c);
}

Word concat(const Word& a, const Word& b) {
  Word r;
  r.reserve(a.size() + b.size());
  r.insert(r.end(), a.begin(), a.end());
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

namespace {

std::atomic<bool> g_memo_enabled{true};

std::mutex g_registry_mutex;
std::map<std::string, PresentationPtr>& registry() {
  static std::map<std::string, PresentationPtr> r;
  return r;
}

std::string lincomb_signature(const LinComb& x) {
  std::string s;
  for (const auto& [w, c] : x) {
    s += "[";
    for (Letter l : w) s += std::to_string(l) + ".";
    s += "]" + c.to_string() + ";";
  }
  return s;
}

}  // namespace

void set_reduction_memo(bool enabled) { g_memo_enabled = enabled; }
bool reduction_memo_enabled() { return g_memo_enabled; }

// ---------------------------------------------------------------------------
// Presentation

Presentation::Presentation(PresentationData data) : data_(std::move(data)) {}

PresentationPtr Presentation::make(PresentationData data, bool check_termination) {
  const auto n = data.generators.size();
  if (n == 0 || n > 250) throw AlgebraError("presentation needs between 1 and 250 generators");
  for (std::size_t i = 0; i < n; ++i) {
    const auto& g = data.generators[i];
    if (g.adjoint < 0 || static_cast<std::size_t>(g.adjoint) >= n)
      throw AlgebraError("generator " + g.name + ": adjoint index out of range");
    const auto& partner = data.generators[g.adjoint];
    if (static_cast<std::size_t>(partner.adjoint) != i)
      throw AlgebraError("generator " + g.name + ": adjoint pairing is not an involution");
    if (partner.degree != -g.degree) throw AlgebraError("generator " + g.name + ": deg(g*) != -deg(g)");
  }
  if (data.parameter && data.parameter->is_zero()) throw AlgebraError("parameter must be invertible");

  auto p = std::shared_ptr<Presentation>(new Presentation(std::move(data)));
  p->unary_rule_.assign(n, -1);
  p->binary_rule_.assign(n, std::vector<int>(n, -1));
  bool terminating = true;
  for (std::size_t r = 0; r < p->data_.rules.size(); ++r) {
    const auto& rule = p->data_.rules[r];
    if (rule.lhs.empty() || rule.lhs.size() > 2) throw AlgebraError("rule left-hand sides must have one or two letters");
    for (Letter l : rule.lhs)
      if (l >= n) throw AlgebraError("rule uses an unknown generator");
    int& slot = rule.lhs.size() == 1 ? p->unary_rule_[rule.lhs[0]] : p->binary_rule_[rule.lhs[0]][rule.lhs[1]];
    if (slot != -1) throw AlgebraError("two rules share the left-hand side " + p->word_to_string(rule.lhs));
    slot = static_cast<int>(r);
    const int d = p->word_degree(rule.lhs);
    for (const auto& [w, c] : rule.rhs) {
      for (Letter l : w)
        if (l >= n) throw AlgebraError("rule uses an unknown generator");
      if (p->word_degree(w) != d)
        throw AlgebraError("rule " + p->word_to_string(rule.lhs) + " is not degree-homogeneous");
      if (!WordLess{}(w, rule.lhs)) terminating = false;
    }
  }
  if (check_termination && !terminating)
    throw AlgebraError("rule set does not decrease the degree-lexicographic word order");
  p->terminating_ = terminating;

  std::ostringstream sig;
  sig << "gens:";
  for (const auto& g : p->data_.generators) sig << g.name << "|" << g.degree << "|" << g.adjoint << "|" << g.leg << ";";
  sig << "rules:";
  for (const auto& rule : p->data_.rules) {
    for (Letter l : rule.lhs) sig << int(l) << ".";
    sig << "->" << lincomb_signature(rule.rhs) << "/";
  }
  sig << "param:" << (p->data_.parameter ? p->data_.parameter->to_string() : "-");
  sig << "factors:" << p->data_.factors.size() << "twists:";
  for (const auto& row : p->data_.twists)
    for (const auto& t : row) sig << t.to_string() << ",";
  p->signature_ = sig.str();

  std::lock_guard lock(g_registry_mutex);
  auto [it, inserted] = registry().try_emplace(p->signature_, p);
  if (inserted) p->self_ = p;
  return it->second;
}

Scalar Presentation::natural_zeta() const {
  if (!data_.parameter) return Scalar(1);
  return *data_.parameter / data_.parameter->conjugate();
}

PresentationPtr Presentation::factor(int leg) const {
  if (!is_product()) {
    if (leg != 1) throw AlgebraError("invalid leg " + std::to_string(leg));
    return self();
  }
  if (leg < 1 || leg > leg_count()) throw AlgebraError("invalid leg " + std::to_string(leg));
  return data_.factors[leg - 1];
}

const Scalar& Presentation::twist(int leg_i, int leg_j) const {
  static const Scalar one(1);
  if (!is_product()) return one;
  return data_.twists.at(leg_i - 1).at(leg_j - 1);
}

int Presentation::leg_offset(int leg) const {
  if (!is_product()) {
    if (leg != 1) throw AlgebraError("invalid leg " + std::to_string(leg));
    return 0;
  }
  if (leg < 1 || leg > leg_count()) throw AlgebraError("invalid leg " + std::to_string(leg));
  int off = 0;
  for (int l = 1; l < leg; ++l) off += static_cast<int>(data_.factors[l - 1]->size());
  return off;
}

int Presentation::find_generator(std::string_view name) const {
  for (std::size_t i = 0; i < data_.generators.size(); ++i)
    if (data_.generators[i].name == name) return static_cast<int>(i);
  return -1;
}

const RewriteRule* Presentation::rule_for(Letter a) const {
  int r = unary_rule_[a];
  return r < 0 ? nullptr : &data_.rules[r];
}

const RewriteRule* Presentation::rule_for(Letter a, Letter b) const {
  int r = binary_rule_[a][b];
  return r < 0 ? nullptr : &data_.rules[r];
}

bool Presentation::is_normal(const Word& w) const {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (unary_rule_[w[i]] >= 0) return false;
    if (i + 1 < w.size() && binary_rule_[w[i]][w[i + 1]] >= 0) return false;
  }
  return true;
}

std::vector<std::pair<std::size_t, int>> Presentation::redexes(const Word& w) const {
  std::vector<std::pair<std::size_t, int>> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (unary_rule_[w[i]] >= 0) out.emplace_back(i, unary_rule_[w[i]]);
    if (i + 1 < w.size() && binary_rule_[w[i]][w[i + 1]] >= 0) out.emplace_back(i, binary_rule_[w[i]][w[i + 1]]);
  }
  return out;
}

int Presentation::word_degree(const Word& w) const {
  int d = 0;
  for (Letter l : w) d += data_.generators[l].degree;
  return d;
}

std::string Presentation::word_to_string(const Word& w, bool unicode) const {
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += unicode ? "·" : "*";
    const auto& g = data_.generators[w[i]];
    out += unicode ? g.pretty : g.name;
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

// Normal form of u*x for normal u. Only the junction (last(u), x) or a unary
// rule on x can be a redex.
LinComb Presentation::multiply_letter(const Word& u, Letter x) const {
  const RewriteRule* rule = rule_for(x);
  Word prefix;
  if (rule) {
    prefix = u;
  } else if (!u.empty() && (rule = rule_for(u.back(), x))) {
    prefix.assign(u.begin(), u.end() - 1);
  } else {
    LinComb r;
    Word w = u;
    w.push_back(x);
    r.emplace(std::move(w), Scalar(1));
    return r;
  }

  const bool memo = g_memo_enabled;
  Word key;
  if (memo) {
    key = u;
    key.push_back(x);
    std::lock_guard lock(memo_mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  LinComb result = multiply_lincomb(prefix, rule->rhs);
  if (memo) {
    std::lock_guard lock(memo_mutex_);
    memo_.emplace(std::move(key), result);
  }
  return result;
}

LinComb Presentation::multiply_lincomb(const Word& u, const LinComb& rhs) const {
  LinComb out;
  for (const auto& [w, c] : rhs) add_scaled(out, multiply(u, w), c);
  return out;
}

LinComb Presentation::multiply(const Word& u, const Word& v) const {
  LinComb cur;
  cur.emplace(u, Scalar(1));
  for (Letter x : v) {
    LinComb next;
    for (const auto& [w, c] : cur) add_scaled(next, multiply_letter(w, x), c);
    cur = std::move(next);
    if (cur.empty()) break;
  }
  return cur;
}

LinComb Presentation::normal_form(const LinComb& raw) const {
  LinComb out;
  static const Word empty;
  for (const auto& [w, c] : raw) add_scaled(out, multiply(empty, w), c);
  return out;
}

// ---------------------------------------------------------------------------
// Degree

std::string Degree::to_string() const {
  switch (kind) {
    case Kind::homogeneous:
      return std::to_string(value);
    case Kind::zero:
      return "zero";
    case Kind::inhomogeneous:
      return "inhomogeneous";
  }
  return "";
}

// ---------------------------------------------------------------------------
// Element

Element::Element(PresentationPtr p, const LinComb& raw) : pres_(std::move(p)), terms_(pres_->normal_form(raw)) {}

Element Element::from_normal(PresentationPtr p, LinComb terms) {
  Element e(std::move(p));
  e.terms_ = std::move(terms);
  return e;
}

Element Element::scalar(PresentationPtr p, const Scalar& c) {
  LinComb t;
  add_term(t, Word{}, c);
  return from_normal(std::move(p), std::move(t));
}

Element Element::generator(PresentationPtr p, int index) {
  if (index < 0 || static_cast<std::size_t>(index) >= p->size()) throw AlgebraError("generator index out of range");
  LinComb raw;
  raw.emplace(Word{static_cast<Letter>(index)}, Scalar(1));
  return Element(std::move(p), raw);
}

Element Element::generator(PresentationPtr p, std::string_view name) {
  int idx = p->find_generator(name);
  if (idx < 0) throw AlgebraError("unknown generator '" + std::string(name) + "' in " + p->name());
  return generator(std::move(p), idx);
}

Element Element::word(PresentationPtr p, const Word& w, const Scalar& c) {
  LinComb raw;
  add_term(raw, w, c);
  return Element(std::move(p), raw);
}

bool Element::is_scalar(Scalar* c) const {
  if (terms_.empty()) {
    if (c) *c = Scalar(0);
    return true;
  }
  if (terms_.size() == 1 && terms_.begin()->first.empty()) {
    if (c) *c = terms_.begin()->second;
    return true;
  }
  return false;
}

Degree Element::degree() const {
  if (terms_.empty()) return Degree::zero();
  std::optional<int> d;
  for (const auto& [w, c] : terms_) {
    int wd = pres_->word_degree(w);
    if (d && *d != wd) return Degree::inhomogeneous();
    d = wd;
  }
  return Degree::of(*d);
}

Element Element::homogeneous_component(int d) const {
  LinComb t;
  for (const auto& [w, c] : terms_)
    if (pres_->word_degree(w) == d) t.emplace(w, c);
  return from_normal(pres_, std::move(t));
}

std::map<int, Element> Element::components() const {
  std::map<int, LinComb> parts;
  for (const auto& [w, c] : terms_) parts[pres_->word_degree(w)].emplace(w, c);
  std::map<int, Element> out;
  for (auto& [d, t] : parts) out.emplace(d, from_normal(pres_, std::move(t)));
  return out;
}

LinComb raw_adjoint(const Presentation& p, const LinComb& x) {
  LinComb out;
  for (const auto& [w, c] : x) {
    Word r(w.rbegin(), w.rend());
    for (auto& l : r) l = static_cast<Letter>(p.generator(l).adjoint);
    add_term(out, r, c.conjugate());
  }
  return out;
}

Element Element::adjoint() const { return Element(pres_, raw_adjoint(*pres_, terms_)); }

Element Element::scaled(const Scalar& c) const {
  LinComb t;
  add_scaled(t, terms_, c);
  return from_normal(pres_, std::move(t));
}

void Element::require_same(const Element& other) const {
  if (pres_ != other.pres_) throw AlgebraError("presentation-mismatch");
}

Element operator+(const Element& a, const Element& b) {
  a.require_same(b);
  LinComb t = a.terms_;
  add_scaled(t, b.terms_, Scalar(1));
  return Element::from_normal(a.pres_, std::move(t));
}

Element operator-(const Element& a) { return a.scaled(Scalar(-1)); }

Element operator-(const Element& a, const Element& b) {
  a.require_same(b);
  LinComb t = a.terms_;
  add_scaled(t, b.terms_, Scalar(-1));
  return Element::from_normal(a.pres_, std::move(t));
}

Element operator*(const Element& a, const Element& b) {
  a.require_same(b);
  LinComb t;
  for (const auto& [u, cu] : a.terms_)
    for (const auto& [v, cv] : b.terms_) add_scaled(t, a.pres_->multiply(u, v), cu * cv);
  return Element::from_normal(a.pres_, std::move(t));
}

bool operator==(const Element& a, const Element& b) { return a.pres_ == b.pres_ && a.terms_ == b.terms_; }

namespace {

// A single-term Laurent coefficient whose rendering starts with '-'.
bool leading_minus(const Scalar& c) {
  if (!c.is_laurent() || c.numerator().size() != 1) return false;
  return c.to_string().starts_with("-");
}

}  // namespace

std::string Element::to_string(bool unicode) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c0] : terms_) {
    bool neg = leading_minus(c0);
    Scalar c = neg ? -c0 : c0;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (w.empty()) {
      std::string s = c.to_string(unicode);
      out += (c.needs_parens() && terms_.size() > 1) ? "(" + s + ")" : s;
      continue;
    }
    std::string ws = pres_->word_to_string(w, unicode);
    if (c.is_one()) {
      out += ws;
    } else {
      std::string s = c.to_string(unicode);
      out += (c.needs_parens() ? "(" + s + ")" : s) + (unicode ? "·" : "*") + ws;
    }
  }
  return out;
}

Element power(const Element& x, int n) {
  if (n < 0) throw AlgebraError("negative power of an algebra element");
  Element r = Element::unit(x.presentation());
  for (int k = 0; k < n; ++k) r = r * x;
  return r;
}

// ---------------------------------------------------------------------------
// Base presentations

namespace {

LinComb single(const Word& w, const Scalar& c) {
  LinComb t;
  add_term(t, w, c);
  return t;
}

LinComb one_minus(const Scalar& c, const Word& w) {
  LinComb t;
  add_term(t, Word{}, Scalar(1));
  add_term(t, w, -c);
  return t;
}

void add_suq2_rules(std::vector<RewriteRule>& rules, const Scalar& q) {
  const Scalar qb = q.conjugate();
  constexpr Letter g = 0, gs = 1, a = 2, as = 3;
  rules.push_back({{gs, g}, single({g, gs}, 1)});
  rules.push_back({{a, g}, single({g, a}, qb)});
  rules.push_back({{a, gs}, single({gs, a}, q)});
  rules.push_back({{as, g}, single({g, as}, qb.inverse())});
  rules.push_back({{as, gs}, single({gs, as}, q.inverse())});
  rules.push_back({{a, as}, one_minus(q * qb, {g, gs})});
  rules.push_back({{as, a}, one_minus(Scalar(1), {g, gs})});
}

std::vector<Generator> suq2_generators(int gamma_degree) {
  return {{"g", "γ", gamma_degree, 1, 1},
          {"g'", "γ*", -gamma_degree, 0, 1},
          {"a", "α", 0, 3, 1},
          {"a'", "α*", 0, 2, 1}};
}

}  // namespace

PresentationPtr suq2_presentation(const Scalar& q) {
  if (q.is_zero()) throw AlgebraError("q must be invertible");
  PresentationData d;
  d.name = "SU_q(2)";
  d.generators = suq2_generators(1);
  add_suq2_rules(d.rules, q);
  d.parameter = q;
  return Presentation::make(std::move(d));
}

PresentationPtr torus_presentation(const Scalar& zeta) {
  if (zeta.is_zero() || !(zeta * zeta.conjugate()).is_one()) throw AlgebraError("non-unimodular zeta");
  PresentationData d;
  d.name = "T2_zeta";
  d.generators = {{"U", "U", 0, 1, 1}, {"U'", "U*", 0, 0, 1}, {"V", "V", 0, 3, 1}, {"V'", "V*", 0, 2, 1}};
  constexpr Letter u = 0, us = 1, v = 2, vs = 3;
  const Scalar zb = zeta.conjugate();
  d.rules.push_back({{u, us}, single({}, 1)});
  d.rules.push_back({{us, u}, single({}, 1)});
  d.rules.push_back({{v, vs}, single({}, 1)});
  d.rules.push_back({{vs, v}, single({}, 1)});
  d.rules.push_back({{v, u}, single({u, v}, zeta.inverse())});
  d.rules.push_back({{v, us}, single({us, v}, zeta)});
  d.rules.push_back({{vs, u}, single({u, vs}, zeta)});
  d.rules.push_back({{vs, us}, single({us, vs}, zb)});
  return Presentation::make(std::move(d));
}

PresentationPtr uq2_presentation(const Scalar& q) {
  if (q.is_zero()) throw AlgebraError("q must be invertible");
  PresentationData d;
  d.name = "U_q(2)";
  d.generators = suq2_generators(0);
  d.generators.push_back({"z", "z", 0, 5, 1});
  d.generators.push_back({"z'", "z*", 0, 4, 1});
  add_suq2_rules(d.rules, q);
  const Scalar zeta = q / q.conjugate();
  constexpr Letter g = 0, gs = 1, a = 2, as = 3, z = 4, zs = 5;
  d.rules.push_back({{z, zs}, single({}, 1)});
  d.rules.push_back({{zs, z}, single({}, 1)});
  d.rules.push_back({{z, a}, single({a, z}, 1)});
  d.rules.push_back({{z, as}, single({as, z}, 1)});
  d.rules.push_back({{zs, a}, single({a, zs}, 1)});
  d.rules.push_back({{zs, as}, single({as, zs}, 1)});
  d.rules.push_back({{z, g}, single({g, z}, zeta.inverse())});
  d.rules.push_back({{z, gs}, single({gs, z}, zeta)});
  d.rules.push_back({{zs, g}, single({g, zs}, zeta)});
  d.rules.push_back({{zs, gs}, single({gs, zs}, zeta.inverse())});
  d.parameter = q;
  return Presentation::make(std::move(d));
}

PresentationPtr free_presentation(const std::string& name, const std::vector<std::pair<std::string, int>>& gens) {
  PresentationData d;
  d.name = name;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const auto& [n, deg] = gens[k];
    int i = static_cast<int>(2 * k);
    d.generators.push_back({n, n, deg, i + 1, 1});
    d.generators.push_back({n + "'", n + "*", -deg, i, 1});
  }
  return Presentation::make(std::move(d));
}

// ---------------------------------------------------------------------------
// Rule-by-rule reduction and confluence

namespace {

LinComb rewrite_at(const Presentation& p, const Word& w, std::size_t pos, int rule_index) {
  const RewriteRule& rule = p.rules()[rule_index];
  LinComb out;
  for (const auto& [r, c] : rule.rhs) {
    Word nw(w.begin(), w.begin() + pos);
    nw.insert(nw.end(), r.begin(), r.end());
    nw.insert(nw.end(), w.begin() + pos + rule.lhs.size(), w.end());
    add_term(out, nw, c);
  }
  return out;
}

}  // namespace

std::optional<LinComb> reduce_by_rules(const Presentation& p, LinComb raw, Strategy strategy, std::mt19937_64* rng,
                                       std::size_t budget) {
  LinComb done;
  LinComb pending = std::move(raw);
  std::size_t steps = 0;
  while (!pending.empty()) {
    auto it = pending.begin();
    if (strategy == Strategy::random && rng && pending.size() > 1) {
      std::uniform_int_distribution<std::size_t> pick(0, pending.size() - 1);
      std::advance(it, pick(*rng));
    }
    Word w = it->first;
    Scalar c = it->second;
    pending.erase(it);
    auto rx = p.redexes(w);
    if (rx.empty()) {
      add_term(done, w, c);
      continue;
    }
    if (++steps > budget) return std::nullopt;
    std::size_t choice = 0;
    if (strategy == Strategy::random && rng && rx.size() > 1) {
      std::uniform_int_distribution<std::size_t> pick(0, rx.size() - 1);
      choice = pick(*rng);
    }
    add_scaled(pending, rewrite_at(p, w, rx[choice].first, rx[choice].second), c);
  }
  return done;
}

namespace {

std::string describe(const Presentation& p, const std::optional<LinComb>& x) {
  if (!x) return "<no normal form within step budget>";
  if (x->empty()) return "0";
  std::string s;
  for (const auto& [w, c] : *x) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")*[" + p.word_to_string(w) + "]";
  }
  return s;
}

// Every first rewrite step on `w` must lead to one normal form.
void check_word_branches(const Presentation& p, const Word& w, std::vector<Divergence>& out) {
  auto rx = p.redexes(w);
  if (rx.size() < 2) return;
  std::optional<LinComb> reference;
  for (std::size_t k = 0; k < rx.size(); ++k) {
    auto nf = reduce_by_rules(p, rewrite_at(p, w, rx[k].first, rx[k].second), Strategy::leftmost);
    if (!nf) {
      out.push_back({w, "non-terminating reduction after rewriting at position " + std::to_string(rx[k].first)});
      return;
    }
    if (k == 0) {
      reference = std::move(nf);
    } else if (*nf != *reference) {
      out.push_back({w, "branches diverge: " + describe(p, reference) + " vs " + describe(p, nf)});
      return;
    }
  }
}

}  // namespace

ConfluenceReport confluence_check(const PresentationPtr& pp, int maxlen, int trials, std::uint64_t seed) {
  if (maxlen < 3) throw AlgebraError("confluence_check requires maxlen >= 3");
  const Presentation& p = *pp;
  ConfluenceReport report;
  std::set<Word, WordLess> seen;

  // Critical pairs from rule overlaps.
  for (const auto& r1 : p.rules()) {
    for (const auto& r2 : p.rules()) {
      const Word& l1 = r1.lhs;
      const Word& l2 = r2.lhs;
      for (std::size_t k = 1; k < std::min(l1.size(), l2.size()) + 1; ++k) {
        if (k == l1.size() && k == l2.size()) continue;  // identical rule
        if (!std::equal(l1.end() - k, l1.end(), l2.begin())) continue;
        Word w = concat(l1, Word(l2.begin() + k, l2.end()));
        if (static_cast<int>(w.size()) > maxlen) continue;
        if (seen.insert(w).second) {
          ++report.critical_pairs;
          check_word_branches(p, w, report.divergences);
        }
      }
    }
  }

  // Exhaustive: every word of length <= maxlen with two or more redexes.
  const std::size_t n = p.size();
  std::size_t budget_words = 200000;
  for (int len = 2; len <= maxlen; ++len) {
    Word w(len, 0);
    while (true) {
      if (budget_words == 0) break;
      --budget_words;
      if (p.redexes(w).size() >= 2) {
        ++report.exhaustive_words;
        if (seen.insert(w).second) check_word_branches(p, w, report.divergences);
      }
      int i = len - 1;
      while (i >= 0 && ++w[i] == n) w[i--] = 0;
      if (i < 0) break;
    }
  }

  // Randomized rule order against the canonical normal form.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len_dist(1, maxlen);
  std::uniform_int_distribution<int> gen_dist(0, static_cast<int>(n) - 1);
  for (int t = 0; t < trials; ++t) {
    Word w(len_dist(rng));
    for (auto& l : w) l = static_cast<Letter>(gen_dist(rng));
    ++report.random_trials;
    LinComb raw;
    raw.emplace(w, Scalar(1));
    auto random_nf = reduce_by_rules(p, raw, Strategy::random, &rng);
    std::optional<LinComb> reference =
        p.terminating() ? std::optional<LinComb>(p.normal_form(raw)) : reduce_by_rules(p, raw, Strategy::leftmost);
    if (!random_nf || !reference) {
      report.divergences.push_back({w, "non-terminating reduction"});
    } else if (*random_nf != *reference) {
      report.divergences.push_back({w, "random rule order gives " + describe(p, random_nf) + " instead of " +
                                           describe(p, reference)});
    }
  }
  return report;
}

}  // namespace suq2
