#include "doctest.h"
#include "spintor/polyform.hpp"
#include "spintor/verify_suites.hpp"

using namespace spintor;

namespace {

const Signature kSig21(2, 1);

Polyform gen(int i) { return Polyform::generator(kSig21, i); }

}  // namespace

TEST_CASE("rational arithmetic stays normalized") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
  CHECK(Rat(3, -6) == Rat(-1, 2));
  CHECK((Rat(1, 2) * Rat(2, 3)) == Rat(1, 3));
  CHECK_THROWS_AS(Rat(1, 0), DomainError);
}

TEST_CASE("signature validation") {
  CHECK_NOTHROW(Signature(2, 1));
  CHECK_NOTHROW(Signature(0, 7));
  CHECK_THROWS_AS(Signature(2, 2), StructuralError);
  CHECK_THROWS_AS(Signature(3, 1), StructuralError);
}

TEST_CASE("generator squares follow the metric") {
  CHECK(geometric_product(gen(1), gen(1)) ==
        Polyform::scalar(kSig21, Rat(1)));
  CHECK(geometric_product(gen(3), gen(3)) ==
        Polyform::scalar(kSig21, Rat(-1)));
}

TEST_CASE("volume form squares to one and is central") {
  Polyform nu = Polyform::volume(kSig21);
  CHECK(geometric_product(nu, nu) == Polyform::scalar(kSig21, Rat(1)));
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    Polyform a = random_polyform(kSig21, rng);
    CHECK(geometric_product(nu, a) == geometric_product(a, nu));
  }
}

TEST_CASE("disjoint blades multiply as wedges") {
  Polyform e12 = wedge(gen(1), gen(2));
  Polyform expect = Polyform::blade(kSig21, 0b111, Rat(1));
  CHECK(geometric_product(e12, gen(3)) == expect);
}

TEST_CASE("grade signs of pi and tau") {
  CHECK(pi_aut(gen(1)) == -gen(1));
  Polyform e12 = wedge(gen(1), gen(2));
  CHECK(tau_antiaut(e12) == -e12);
  Polyform e123 = Polyform::volume(kSig21);
  CHECK(pi_aut(tau_antiaut(e123)) == e123);
}

TEST_CASE("hodge star convention pinned by the nu action") {
  Polyform one = Polyform::scalar(kSig21, Rat(1));
  Polyform nu = Polyform::volume(kSig21);
  CHECK(hodge_star(one) == nu);
  CHECK(hodge_star(nu) == -one);
  // a <> nu = * tau(a) on every basis blade
  for (BladeMask m = 0; m < 8; ++m) {
    Polyform a = Polyform::blade(kSig21, m, Rat(1));
    CHECK(geometric_product(a, nu) == hodge_star(tau_antiaut(a)));
  }
}

TEST_CASE("half projectors") {
  std::mt19937_64 rng(5);
  SignLabel plus(+1), minus(-1);
  Polyform one = Polyform::scalar(kSig21, Rat(1));
  for (SignLabel l : {plus, minus}) {
    Polyform el = half_unit<Rat>(kSig21, l);
    CHECK(project_half(l, el) == el);
    CHECK(project_half(l, one) == el);
  }
  for (int t = 0; t < 50; ++t) {
    Polyform a = random_polyform(kSig21, rng);
    CHECK(project_half(plus, a) + project_half(minus, a) == a);
  }
}

TEST_CASE("truncation and its inverse on the half algebra") {
  Polyform one = Polyform::scalar(kSig21, Rat(1));
  Polyform nu = Polyform::volume(kSig21);
  CHECK(truncate(one + nu) == one);
  Polyform u = gen(1) + gen(3);
  CHECK(truncate(u) == u);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    Polyform a = random_polyform(kSig21, rng, 8, true);
    SignLabel l(t % 2 ? +1 : -1);
    CHECK(Rat(2) * truncate(project_half(l, a)) == a);
  }
}

TEST_CASE("vee product closed form in signature (2,1)") {
  std::mt19937_64 rng(11);
  SignLabel plus(+1);
  for (int t = 0; t < 50; ++t) {
    Rat c1 = Rat(t % 5 - 2), c2 = Rat((t * 3) % 7 - 3);
    Polyform a1(kSig21), a2(kSig21);
    for (int i = 1; i <= 3; ++i) {
      a1 = a1 + Rat((t + i) % 5 - 2) * gen(i);
      a2 = a2 + Rat((t * i) % 5 - 2) * gen(i);
    }
    Polyform lhs = vee_product(Polyform::scalar(kSig21, c1) + a1,
                               Polyform::scalar(kSig21, c2) + a2, plus);
    Polyform rhs = Polyform::scalar(kSig21, c1 * c2 + metric_pairing(a1, a2)) +
                   c1 * a2 + c2 * a1 - hodge_star(wedge(a1, a2));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("vee unitality and the conjugate pair identity") {
  SignLabel plus(+1);
  Polyform one = Polyform::scalar(kSig21, Rat(1));
  Polyform u = gen(1) + gen(3);                    // isotropic
  Polyform v = Rat(1, 2) * (gen(1) - gen(3));      // conjugate isotropic
  CHECK(metric_pairing(u, u) == Rat(0));
  CHECK(metric_pairing(v, v) == Rat(0));
  CHECK(metric_pairing(u, v) == Rat(1));
  std::mt19937_64 rng(13);
  for (int t = 0; t < 20; ++t) {
    Polyform a = random_polyform(kSig21, rng, 8, true);
    CHECK(vee_product(one, a, plus) == a);
  }
  CHECK(vee_product(vee_product(u, v, plus), u, plus) == Rat(2) * u);
}

TEST_CASE("truncated trace") {
  Polyform one = Polyform::scalar(kSig21, Rat(1));
  CHECK(trace_S(one) == Rat(2));
  CHECK(trace_S(gen(1)) == Rat(0));
  std::mt19937_64 rng(17);
  SignLabel plus(+1);
  for (int t = 0; t < 50; ++t) {
    Polyform a = random_polyform(kSig21, rng, 8, true);
    Polyform b = random_polyform(kSig21, rng, 8, true);
    CHECK(trace_S(vee_product(a, b, plus)) ==
          trace_S(vee_product(b, a, plus)));
  }
}

TEST_CASE("transpose signs and involutivity") {
  Polyform u = gen(2);
  CHECK(transpose_pf(u, -1) == -u);
  CHECK(transpose_pf(u, +1) == u);
  Polyform one = Polyform::scalar(kSig21, Rat(1));
  CHECK(transpose_pf(one, -1) == one);
  CHECK(transpose_pf(one, +1) == one);
  std::mt19937_64 rng(19);
  for (int t = 0; t < 50; ++t) {
    Polyform a = random_polyform(kSig21, rng);
    int sigma = t % 2 ? +1 : -1;
    CHECK(transpose_pf(transpose_pf(a, sigma), sigma) == a);
  }
}

TEST_CASE("vee requires truncated input") {
  Polyform nu = Polyform::volume(kSig21);
  CHECK_THROWS_AS(vee_product(nu, nu, SignLabel(+1)), StructuralError);
}

TEST_CASE("signature mismatch is rejected") {
  Polyform a = Polyform::generator(kSig21, 1);
  Polyform b = Polyform::generator(Signature(3, 2), 1);
  CHECK_THROWS_AS(geometric_product(a, b), StructuralError);
}

TEST_CASE("exact property suite across signatures") {
  for (Signature sig : {Signature(2, 1), Signature(3, 2), Signature(4, 3)}) {
    Report rep = verify_algebra(sig, 150, 42);
    INFO(report_to_text(rep));
    CHECK(rep.all_pass());
  }
}
