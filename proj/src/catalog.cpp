#include "suq2/catalog.hpp"

#include <functional>

namespace suq2 {

namespace {

GenMorphism verified(GenMorphism f) {
  auto report = check_welldefined(f);
  if (!report.pass) throw AlgebraError(f.name() + " is not well-defined: " + report.residuals.front().relation);
  return f;
}

Element gen(const PresentationPtr& p, const char* name) { return Element::generator(p, name); }

}  // namespace

PresentationPtr suq2_tensor2(const Scalar& q) { return twisted_power(suq2_presentation(q), 2, q / q.conjugate()); }
PresentationPtr suq2_tensor3(const Scalar& q) { return twisted_power(suq2_presentation(q), 3, q / q.conjugate()); }
PresentationPtr uq2_tensor2(const Scalar& q) { return twisted_power(uq2_presentation(q), 2, Scalar(1)); }

AlgMatrix fundamental_matrix(const PresentationPtr& p, std::vector<int> degrees) {
  const Scalar q = p->parameter().value_or(Scalar::q());
  const Element a = gen(p, "a"), g = gen(p, "g");
  return AlgMatrix::from_rows(p, {std::move(degrees)}, {{a, g.adjoint().scaled(-q)}, {g, a.adjoint()}});
}

GenMorphism delta_su(const PresentationPtr& p) {
  if (!p->parameter()) throw AlgebraError("delta needs a parameter");
  const Scalar q = *p->parameter();
  auto t = twisted_tensor(p, p, q / q.conjugate());
  auto j = [&](int leg, const char* n) { return embed(t, leg, gen(p, n)); };
  Element da = j(1, "a") * j(2, "a") - (j(1, "g'") * j(2, "g")).scaled(q);
  Element dg = j(1, "g") * j(2, "a") + j(1, "a'") * j(2, "g");
  return verified(GenMorphism::by_name("delta", p, t, {{"a", da}, {"g", dg}}));
}

GenMorphism delta_su(const Scalar& q) { return delta_su(suq2_presentation(q)); }

GenMorphism delta_uq2(const Scalar& q) {
  auto b = uq2_presentation(q);
  auto t = uq2_tensor2(q);
  auto j = [&](int leg, const char* n) { return embed(t, leg, gen(b, n)); };
  Element dz = j(1, "z") * j(2, "z");
  Element da = j(1, "a") * j(2, "a") - (j(1, "g'") * j(1, "z") * j(2, "g")).scaled(q);
  Element dg = j(1, "g") * j(2, "a") + j(1, "a'") * j(1, "z") * j(2, "g");
  return verified(GenMorphism::by_name("delta_B", b, t, {{"a", da}, {"g", dg}, {"z", dz}}));
}

GenMorphism iota1(const Scalar& q) {
  auto a = suq2_presentation(q);
  auto b = uq2_presentation(q);
  auto t = uq2_tensor2(q);
  return verified(GenMorphism::by_name("iota1", a, t,
                                       {{"a", embed(t, 1, gen(b, "a"))}, {"g", embed(t, 1, gen(b, "g"))}}));
}

GenMorphism iota2(const Scalar& q) {
  auto a = suq2_presentation(q);
  auto b = uq2_presentation(q);
  auto t = uq2_tensor2(q);
  return verified(GenMorphism::by_name(
      "iota2", a, t, {{"a", embed(t, 2, gen(b, "a"))}, {"g", embed(t, 1, gen(b, "z")) * embed(t, 2, gen(b, "g"))}}));
}

GenMorphism su2_into_uq2(const Scalar& q) {
  auto a = suq2_presentation(q);
  auto b = uq2_presentation(q);
  return verified(GenMorphism::by_name("incl", a, b, {{"a", gen(b, "a")}, {"g", gen(b, "g")}}));
}

GenMorphism q_inverse_iso(const Scalar& q) {
  auto src = suq2_presentation(q);
  auto tgt = suq2_presentation(q.inverse());
  return verified(GenMorphism::by_name("qinv", src, tgt,
                                       {{"a", gen(tgt, "a'")}, {"g", gen(tgt, "g").scaled(q.inverse())}}));
}

GenMorphism phi_symmetry(const Scalar& q) {
  const Scalar qt = q.conjugate().inverse();
  auto src = grading_flip(suq2_presentation(q));
  auto tgt = suq2_presentation(qt);
  return verified(
      GenMorphism::by_name("phi", src, tgt, {{"a", gen(tgt, "a'")}, {"g", gen(tgt, "g'").scaled(qt)}}));
}

GenMorphism rho_scale(const PresentationPtr& p, int m) {
  const Scalar zeta = default_zeta(p);
  std::map<int, Element> a;
  for (int i = 0; i < static_cast<int>(p->size()); ++i)
    a.emplace(i, Element::generator(p, i).scaled(zeta.pow(m * p->generator(i).degree)));
  return verified(GenMorphism("rho^" + std::to_string(m), p, p, a));
}

std::vector<GenMorphism> catalog() {
  return {delta_su(),    delta_uq2(),     iota1(),       iota2(),
          su2_into_uq2(), q_inverse_iso(), phi_symmetry(), rho_scale(suq2_presentation(), 1)};
}

bool CancellationReport::pass() const {
  if (!dmm1.pass || !dmm2.pass) return false;
  for (const auto& w : first)
    if (!w.holds) return false;
  for (const auto& w : second)
    if (!w.holds) return false;
  return true;
}

namespace {

int degree_of(const Element& x) {
  Degree d = x.degree();
  if (d.kind == Degree::Kind::inhomogeneous) throw AlgebraError("witness factor is not homogeneous");
  return d.value;
}

// Entry positions of the four letters g, g', a, a' inside u, with the scale
// turning the entry into the letter.
struct EntryRef {
  int r, c;
  Scalar scale;
};

EntryRef entry_of(const Presentation& A, Letter l, const Scalar& q) {
  const std::string& n = A.generator(l).name;
  if (n == "a") return {0, 0, Scalar(1)};
  if (n == "g") return {1, 0, Scalar(1)};
  if (n == "a'") return {1, 1, Scalar(1)};
  return {0, 1, -q.inverse()};  // g' = -q^{-1} u_01
}

}  // namespace

CancellationReport cancellation_witness(const Scalar& q, int max_length) {
  CancellationReport rep;
  rep.max_length = max_length;
  auto A = suq2_presentation(q);
  const Scalar zeta = q / q.conjugate();
  GenMorphism delta = delta_su(A);
  auto T = delta.target();
  const AlgMatrix u = fundamental_matrix(A);
  const AlgMatrix du = map_entries(delta, u);
  const AlgMatrix j1u = embed_entries(T, 1, u);
  const AlgMatrix j2u = embed_entries(T, 2, u);
  rep.dmm1 = zero_check(mat_sub(j1u, mat_mul(du, mat_adjoint(j2u))), "Dmm1");
  rep.dmm2 = zero_check(mat_sub(j2u, mat_mul(mat_adjoint(j1u), du)), "Dmm2");

  // Single letters, read off the two matrix identities entrywise:
  // j₁(u_rc) = Σ_k Δ(u_rk) j₂(u_ck*) and j₂(u_rc) = Σ_k j₁(u_kr*) Δ(u_kc).
  auto letter_first = [&](Letter l) {
    auto [r, c, s] = entry_of(*A, l, q);
    std::vector<WitnessTerm> t;
    for (int k = 0; k < 2; ++k) t.push_back({s, u.at(r, k), u.at(c, k).adjoint()});
    return t;
  };
  auto letter_second = [&](Letter l) {
    auto [r, c, s] = entry_of(*A, l, q);
    std::vector<WitnessTerm> t;
    for (int k = 0; k < 2; ++k) t.push_back({s, u.at(k, r).adjoint(), u.at(k, c)});
    return t;
  };

  auto check = [&](const Word& w, const std::vector<WitnessTerm>& terms, bool first_family) {
    Element acc = embed(T, first_family ? 1 : 2, Element::word(A, w)).scaled(Scalar(-1));
    for (const auto& t : terms) {
      Element piece = first_family ? apply(delta, t.left) * embed(T, 2, t.right)
                                   : embed(T, 1, t.left) * apply(delta, t.right);
      acc += piece.scaled(t.coeff);
    }
    return acc.is_zero();
  };

  std::map<Word, std::vector<WitnessTerm>> first_memo, second_memo;
  // j₁(w'y) = Σ c Δ(m) j₂(m') j₁(y) and j₂(m') j₁(y) = ζ^{-deg y deg m'} j₁(y) j₂(m').
  std::function<const std::vector<WitnessTerm>&(const Word&)> first = [&](const Word& w) -> const auto& {
    auto it = first_memo.find(w);
    if (it != first_memo.end()) return it->second;
    std::vector<WitnessTerm> out;
    if (w.size() == 1) {
      out = letter_first(w[0]);
    } else {
      const Word prefix(w.begin(), w.end() - 1);
      const Letter y = w.back();
      const int dy = A->generator(y).degree;
      const auto& head = first(prefix);
      const auto tail = letter_first(y);
      for (const auto& h : head)
        for (const auto& t : tail) {
          Element left = h.left * t.left, right = t.right * h.right;
          if (left.is_zero() || right.is_zero()) continue;
          out.push_back({h.coeff * t.coeff * zeta.pow(-dy * degree_of(h.right)), left, right});
        }
    }
    return first_memo.emplace(w, std::move(out)).first->second;
  };
  // j₂(xw') = j₂(x) Σ c j₁(m) Δ(m') and j₂(x) j₁(m) = ζ^{-deg x deg m} j₁(m) j₂(x).
  std::function<const std::vector<WitnessTerm>&(const Word&)> second = [&](const Word& w) -> const auto& {
    auto it = second_memo.find(w);
    if (it != second_memo.end()) return it->second;
    std::vector<WitnessTerm> out;
    if (w.size() == 1) {
      out = letter_second(w[0]);
    } else {
      const Word rest(w.begin() + 1, w.end());
      const Letter x = w.front();
      const int dx = A->generator(x).degree;
      const auto& tail = second(rest);
      const auto head = letter_second(x);
      for (const auto& t : tail)
        for (const auto& h : head) {
          Element left = t.left * h.left, right = h.right * t.right;
          if (left.is_zero() || right.is_zero()) continue;
          out.push_back({t.coeff * h.coeff * zeta.pow(-dx * degree_of(t.left)), left, right});
        }
    }
    return second_memo.emplace(w, std::move(out)).first->second;
  };

  const int n = static_cast<int>(A->size());
  std::vector<Word> words;
  std::vector<Word> layer = {Word{}};
  for (int len = 1; len <= max_length; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (int l = 0; l < n; ++l) {
        Word nw = w;
        nw.push_back(static_cast<Letter>(l));
        next.push_back(nw);
        words.push_back(nw);
      }
    layer = std::move(next);
  }
  for (const auto& w : words) {
    const auto& t1 = first(w);
    rep.first.push_back({w, t1, check(w, t1, true)});
    const auto& t2 = second(w);
    rep.second.push_back({w, t2, check(w, t2, false)});
  }
  return rep;
}

}  // namespace suq2
