// Acceptance suite: one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "fixtures.hpp"
#include "incalg/involutions.hpp"
#include "incalg/oracle.hpp"

using namespace incalg;
namespace orc = incalg::oracle;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

void need(Outcome& o, bool cond, const std::string& what) {
  if (!cond && o.ok) {
    o.ok = false;
    o.detail = what;
  }
}

PosetMap flip_of(const Poset& d) {
  return PosetMap{{d.index("1"), d.index("a"), d.index("b"), d.index("0")}, MapKind::AntiAutomorphism};
}

IncFn coboundary(const ContextPtr& ctx, std::mt19937_64& rng) {
  Vector eta;
  for (Element x = 0; x < ctx->poset.size(); ++x) eta.push_back(ctx->field.random_nonzero(rng));
  IncFn s(ctx);
  for (std::size_t k = 0; k < ctx->dim(); ++k) s[k] = eta[ctx->intervals[k].first] / eta[ctx->intervals[k].second];
  return s;
}

// A random involution conjugate to b: θ = γ b(γ) θ_b.
InvolutionSpec conjugate(const InvolutionSpec& b, std::mt19937_64& rng) {
  DElem g = DElem::random_unit(b.context(), rng);
  return build(g * b(g) * b.theta(), b.lambda(), b.k());
}

orc::Partition oracle_orbits(const Poset& p, std::uint32_t prime, std::vector<orc::RawMap>& items, Outcome& o) {
  orc::SmallRing r(p, prime, orc::Ring::D);
  items = orc::enumerate_involutions_D(p, prime);
  auto gens = orc::unit_generators(r);
  need(o, orc::generated_group_order(r, gens) == r.unit_count(), "oracle generators miss part of the unit group");
  std::vector<orc::Conjugator> conj;
  for (const auto& g : gens) conj.push_back(orc::inner_conjugator(r, g));
  return orc::orbit_partition(r, items, conj);
}

// ---------------------------------------------------------------------------

Outcome ring_axioms() {
  Outcome o;
  std::mt19937_64 rng(11);
  std::size_t checks = 0;
  for (Field k : {Field::prime(5), Field::rationals()}) {
    auto ctx = make_context(fx::diamond(), k);
    for (int t = 0; t < 1000; ++t) {
      IncFn f = IncFn::random(ctx, rng), g = IncFn::random(ctx, rng), h = IncFn::random(ctx, rng);
      need(o, (f * g) * h == f * (g * h), "FI associativity");
      need(o, f * (g + h) == f * g + f * h && (g + h) * f == g * f + h * f, "FI distributivity");
      DElem a = DElem::random(ctx, rng), b = DElem::random(ctx, rng), c = DElem::random(ctx, rng);
      need(o, (a * b) * c == a * (b * c), "D associativity");
      need(o, a * (b + c) == a * b + a * c && (b + c) * a == b * a + c * a, "D distributivity");
      checks += 2;
    }
  }
  if (o.ok) o.detail = std::to_string(checks) + " random triples (FI and D, F5 and Q, diamond)";
  return o;
}

Outcome center_oracle() {
  Outcome o;
  auto brute = orc::commutant(fx::chain2(), 3, orc::Ring::D);
  auto ctx = make_context(fx::chain2(), Field::prime(3));
  std::set<orc::Elem> span;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      orc::Elem e;
      for (const auto& s : d_vector(DElem::central(ctx, ctx->field.from_int(a), ctx->field.from_int(b))))
        e.push_back(s.as_residue());
      span.insert(e);
    }
  need(o, std::set<orc::Elem>(brute.begin(), brute.end()) == span, "commutant differs from span{[δ;0],[0;δ]}");
  if (o.ok) o.detail = "729 elements scanned, commutant = span{[δ;0],[0;δ]} (" + std::to_string(brute.size()) + ")";
  return o;
}

Outcome hypothesis_table() {
  Outcome o;
  struct Row {
    const char* name;
    Poset p;
    Field k;
    bool mult, der;
  };
  std::vector<Row> rows{{"X1/F5", fx::fence(), Field::prime(5), true, true},
                        {"X2/F5", fx::crown(), Field::prime(5), false, false},
                        {"X2/F2", fx::crown(), Field::prime(2), true, false}};
  std::string got;
  for (const auto& r : rows) {
    auto ctx = make_context(r.p, r.k);
    bool m = mult_subset_inn(ctx), d = der_equals_ider(ctx);
    need(o, m == r.mult && d == r.der, std::string("mismatch at ") + r.name);
    got += std::string(got.empty() ? "" : ", ") + r.name + " " + (m ? "✓" : "✗") + (d ? "✓" : "✗");
  }
  if (o.ok) o.detail = got;
  return o;
}

Outcome class_counts() {
  Outcome o;
  struct Row {
    const char* name;
    Poset p;
    std::uint32_t q;
    std::uint64_t expected;
  };
  std::string got;
  for (const auto& r : std::vector<Row>{{"chain3/F5", fx::chain3(), 5, 2},
                                        {"chain3/F3", fx::chain3(), 3, 2},
                                        {"diamond/F3", fx::diamond(), 3, 4},
                                        {"diamond/F5", fx::diamond(), 5, 4}}) {
    auto ctx = make_context(r.p, Field::prime(r.q));
    PosetMap lam = r.p.size() == 4 ? flip_of(r.p) : involutions(r.p).front();
    auto cl = classify(ctx, lam);
    need(o, cl.count == r.expected && cl.representatives.size() == r.expected, std::string("classifier at ") + r.name);
    need(o, inner_class_count(ctx, lam) == r.expected, std::string("formula at ") + r.name);
    got += std::string(got.empty() ? "" : ", ") + r.name + "=" + std::to_string(cl.representatives.size());
  }
  for (auto [name, p, expected] : {std::tuple{"chain2/F3", fx::chain2(), 4u}, std::tuple{"chain3/F3", fx::chain3(), 2u}}) {
    std::vector<orc::RawMap> items;
    auto part = oracle_orbits(p, 3, items, o);
    need(o, part.count == expected, std::string("oracle orbits at ") + name);
    auto ctx = make_context(p, Field::prime(3));
    need(o, classify(ctx, involutions(p).front()).count == expected, std::string("classifier at ") + name);
    got += std::string(", oracle ") + name + "=" + std::to_string(part.count) + " orbits of " +
           std::to_string(items.size());
  }
  if (o.ok) o.detail = got;
  return o;
}

Outcome four_classes() {
  Outcome o;
  std::vector<orc::RawMap> items;
  auto part = oracle_orbits(fx::chain2(), 3, items, o);
  need(o, part.count == 4, "orbit count is " + std::to_string(part.count));
  auto ctx = make_context(fx::chain2(), Field::prime(3));
  PosetMap swap = involutions(ctx->poset).front();
  std::set<std::size_t> blocks;
  for (const auto& rep : {rho_eps(ctx, swap, {}, 1), rho_eps(ctx, swap, {}, -1), sigma_lambda(ctx, swap, 1),
                          sigma_lambda(ctx, swap, -1)}) {
    auto m = orc::from_matrix(rep.matrix());
    auto it = std::find(items.begin(), items.end(), m);
    need(o, it != items.end(), "a named representative is not an oracle involution");
    if (it != items.end()) blocks.insert(part.block[it - items.begin()]);
  }
  need(o, blocks.size() == 4, "named representatives share an orbit");
  if (o.ok) o.detail = "4 orbits over " + std::to_string(items.size()) + " involutions, one per named representative";
  return o;
}

Outcome witness_suite() {
  Outcome o;
  std::mt19937_64 rng(66);
  auto ctx = make_context(fx::diamond(), Field::prime(5));
  const Field& k = ctx->field;
  PosetMap flip = flip_of(ctx->poset);
  const Element a = ctx->poset.index("a"), b = ctx->poset.index("b");
  const Element lo = ctx->poset.index("0"), hi = ctx->poset.index("1");
  const std::vector<std::uint32_t> squares{1, 4}, nonsquares{2, 3};
  int ok_square = 0, ok_nonsquare = 0;
  for (int t = 0; t < 400; ++t) {
    bool square = t < 200;
    InvolutionSpec base = rho_eps(ctx, flip, {k.random_nonzero(rng), k.random_nonzero(rng)}, rng() % 2 ? 1 : -1);
    DElem g = DElem::random_unit(ctx, rng);
    DElem theta = DElem::one(ctx);
    if (square && t % 2 == 0) {
      theta = g * base(g);
    } else {
      // [d;0] symmetric under the base: d(0) = d(1), square or non-square on X3.
      IncFn d = IncFn::delta(ctx);
      Scalar end = k.random_nonzero(rng);
      d.set(lo, lo, end);
      d.set(hi, hi, end);
      // Non-square cases put a non-square at a, at b, or at both.
      int mode = square ? -1 : static_cast<int>(rng() % 3);
      auto pick = [&](bool nonsquare) { return k.from_int((nonsquare ? nonsquares : squares)[rng() % 2]); };
      d.set(a, a, pick(mode == 0 || mode == 2));
      d.set(b, b, pick(mode == 1 || mode == 2));
      theta = g * DElem{d, IncFn(ctx)} * base(g);
    }
    need(o, base(theta) == theta, "generated θ is not base-symmetric");
    try {
      DElem gamma = symmetric_decompose(theta, base);
      need(o, square, "non-square case accepted");
      need(o, gamma * base(gamma) == theta, "γ·Φ0(γ) ≠ θ");
      ok_square += square;
    } catch (const Error& e) {
      need(o, !square && e.kind() == ErrorKind::NotASquare, std::string("unexpected ") + e.what());
      ok_nonsquare += !square;
    }
  }
  if (o.ok)
    o.detail = std::to_string(ok_square) + " exact decompositions, " + std::to_string(ok_nonsquare) + " NotASquare";
  return o;
}

Outcome round_trips() {
  Outcome o;
  std::mt19937_64 rng(77);
  int autos = 0, invs = 0;
  for (int t = 0; t < 100; ++t) {
    auto ctx = make_context(fx::diamond(), t % 2 ? Field::rationals() : Field::prime(5));
    auto maps = automorphisms(ctx->poset);
    FiaMorphism m{IncFn::random_unit(ctx, rng), coboundary(ctx, rng), maps[rng() % maps.size()], false};
    LinearEndo raw = m.matrix();
    FiaMorphism back = decompose(ctx, raw, false);
    need(o, back.matrix() == raw, "automorphism does not recompose");
    autos += back.matrix() == raw;

    auto lams = involutions(ctx->poset);
    PosetMap lam = lams[rng() % lams.size()];
    auto dec = lambda_decomposition(ctx->poset, lam);
    Vector eps;
    for (std::size_t s = 0; s < dec.x3.size(); ++s) eps.push_back(ctx->field.random_nonzero(rng));
    int sign = rng() % 2 ? 1 : -1;
    InvolutionSpec base = dec.x3.empty() && rng() % 2 ? sigma_lambda(ctx, lam, sign) : rho_eps(ctx, lam, eps, sign);
    InvolutionSpec phi = conjugate(base, rng);
    InvolutionSpec rec = recognize(ctx, phi.matrix());
    bool same = rec.matrix() == phi.matrix() && rec.sign() == sign && rec.lambda() == lam;
    need(o, same, "involution does not recompose");
    invs += same;
  }
  if (o.ok) o.detail = std::to_string(autos) + " automorphisms and " + std::to_string(invs) + " involutions recomposed";
  return o;
}

Outcome negative_existence() {
  Outcome o;
  std::vector<Element> rev{2, 1, 0};
  std::uint64_t plus = orc::count_antisymmetric_units(fx::chain3(), 3, rev, 1);
  std::uint64_t minus = orc::count_antisymmetric_units(fx::chain3(), 3, rev, -1);
  need(o, plus == 0 && minus == 0, "found θ with Φ0(θ) = -θ");
  need(o, orc::SmallRing(fx::chain3(), 3, orc::Ring::D).unit_count() == 157464, "unit count");
  if (o.ok) o.detail = "157464 units scanned for k = +1 and k = -1, none antisymmetric";
  return o;
}

Outcome anti_transfer() {
  Outcome o;
  std::mt19937_64 rng(99);
  std::vector<Poset> ps{fx::chain2(), fx::chain3(), fx::vee(), fx::wedge(), fx::diamond(), fx::fence(), fx::crown()};
  std::vector<AntiIsomorphism> found;
  int agree = 0;
  for (const auto& x : ps)
    for (const auto& y : ps) {
      auto u = d_anti_isomorphic(x, y, Field::prime(5));
      bool same = u.has_value() == orc::brute_anti_isomorphic(x, y);
      need(o, same, "existence disagrees with permutation search");
      agree += same;
      if (u) found.push_back(*u);
    }
  for (int t = 0; t < 100; ++t) {
    const auto& u = found[t % found.size()];
    DElem a = DElem::random(u.from, rng), b = DElem::random(u.from, rng);
    need(o, u(a * b) == u(b) * u(a), "Υ is not anti-multiplicative");
    need(o, d_from_vector(u.to, u.upsilon.apply(d_vector(a))) == u(a), "Υ matrix disagrees with Υ");
  }
  if (o.ok) o.detail = std::to_string(agree) + "/49 pairs agree, 100 anti-multiplicativity checks";
  return o;
}

Outcome central_action() {
  Outcome o;
  std::mt19937_64 rng(1010);
  int reps = 0;
  std::vector<std::pair<Poset, Field>> cases{{fx::chain2(), Field::prime(3)}, {fx::chain3(), Field::prime(5)},
                                              {fx::diamond(), Field::prime(3)}, {fx::diamond(), Field::prime(5)},
                                              {fx::chain3(), Field::rationals()}, {fx::chain2(), Field::rationals()}};
  for (const auto& [p, k] : cases) {
    auto ctx = make_context(p, k);
    for (const auto& lam : involutions(p))
      for (const auto& rep : classify(ctx, lam).representatives) {
        for (int t = 0; t < 50; ++t) {
          Scalar k1 = k.random(rng), k2 = k.random(rng);
          need(o, rep(DElem::central(ctx, k1, k2)) == DElem::central(ctx, k1, k.from_int(rep.sign()) * k2),
               "Φ(c) ≠ c(k1, s k2)");
        }
        ++reps;
      }
  }
  if (o.ok) o.detail = std::to_string(reps) + " representatives, 50 central elements each";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget;  // seconds
    std::function<Outcome()> run;
  };
  std::vector<Criterion> all{{1, "ring axioms", 5, ring_axioms},
                             {2, "center oracle", 10, center_oracle},
                             {3, "hypothesis table", 5, hypothesis_table},
                             {4, "class counts", 600, class_counts},
                             {5, "four classes when X3 is empty", 300, four_classes},
                             {6, "symmetric decomposition witnesses", 30, witness_suite},
                             {7, "decomposition round-trips", 60, round_trips},
                             {8, "no antisymmetric unit on chain3/F3", 300, negative_existence},
                             {9, "anti-isomorphism transfer", 30, anti_transfer},
                             {10, "sign and central action", 5, central_action}};
  int failed = 0;
  for (const auto& c : all) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && secs > c.budget) o = {false, "over the time budget of " + std::to_string(c.budget) + " s"};
    failed += !o.ok;
    std::printf("[%s] criterion %d %s: %s (%.2f s)\n", o.ok ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
  return failed ? 1 : 0;
}
