#include <catch2/catch.hpp>

#include <random>

#include "oracles.hpp"
#include "regvar/locvar.hpp"

using namespace regvar;

namespace {
  using State = CanonicalDfa::State;

  Alphabet const A  = Alphabet::parse("a");
  Alphabet const AB = Alphabet::parse("ab");

  CSignature const all_csigs[]
      = {CSignature::ba, CSignature::dlat, CSignature::slat, CSignature::z2vec};

  std::vector<CanonicalDfa> langs(Alphabet const&                 alphabet,
                                  std::vector<std::string> const& regexes) {
    std::vector<CanonicalDfa> out;
    for (auto const& r : regexes) {
      out.push_back(compile(r, alphabet));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // A random language with at most 6 states whose syntactic monoid has at
  // most `max_monoid` elements.
  CanonicalDfa random_language(std::mt19937& rng, Alphabet const& alphabet,
                               std::size_t max_monoid = 8) {
    while (true) {
      std::size_t        n = 1 + rng() % 6;
      std::vector<State> delta(n * alphabet.size());
      std::vector<bool>  acc(n);
      for (auto& q : delta) {
        q = rng() % n;
      }
      for (std::size_t q = 0; q < n; ++q) {
        acc[q] = rng() % 2;
      }
      auto l = CanonicalDfa::from_dfa(alphabet, n, 0, delta, acc);
      if (transition_monoid(l).size() <= max_monoid) {
        return l;
      }
    }
  }
}  // namespace

TEST_CASE("close examples", "[locvar]") {
  auto even = compile("(aa)*", A);
  auto v    = close(CSignature::ba, A, {even});
  CHECK(v.languages() == langs(A, {"0", "(aa)*", "a(aa)*", "a*"}));
  CHECK(close(CSignature::slat, A, {even}).languages() == v.languages());
  CHECK(close(CSignature::dlat, A, {even}).languages() == v.languages());
  CHECK(close(CSignature::z2vec, A, {even}).languages() == v.languages());
  for (auto c : all_csigs) {
    auto least = close(c, AB, {});
    if (c == CSignature::ba || c == CSignature::dlat) {
      CHECK(least.languages() == langs(AB, {"0", "(a|b)*"}));
    } else {
      CHECK(least.languages() == langs(AB, {"0"}));
    }
  }
  CHECK_THROWS_AS(LocalVariety(CSignature::ba, A, langs(A, {"0", "a*", "(aa)*"})),
                  InputError);
  CHECK_NOTHROW(LocalVariety(CSignature::ba, A, v.languages()));
}

TEST_CASE("close agrees with naive closure", "[locvar]") {
  std::mt19937 rng(11);
  for (int round = 0; round < 40; ++round) {
    auto const& alphabet = round % 2 ? AB : A;
    auto        l        = random_language(rng, alphabet, 6);
    for (auto c : all_csigs) {
      auto v     = close(c, alphabet, {l});
      auto naive = oracle::naive_closure(c, alphabet, {l});
      REQUIRE(v.languages() == naive);
      REQUIRE(LocalVariety::violations(c, alphabet, v.languages()).empty());
    }
  }
}

TEST_CASE("coalgebra structure", "[locvar]") {
  auto v    = close(CSignature::ba, A, {compile("(aa)*", A)});
  auto c    = coalgebra_structure(v);
  auto even = *v.index(compile("(aa)*", A));
  auto odd  = *v.index(compile("a(aa)*", A));
  auto none = *v.index(compile("0", A));
  CHECK(c.gamma1[even]);
  CHECK_FALSE(c.gamma1[none]);
  CHECK(c.gamma2[even][0] == odd);
  CHECK(c.gamma2[odd][0] == even);
}

TEST_CASE("variety_to_monoid examples", "[locvar]") {
  auto even = compile("(aa)*", A);
  auto m    = variety_to_monoid(close(CSignature::ba, A, {even}));
  CHECK(m == transition_monoid(even));
  CHECK(m.size() == 2);
  CHECK(variety_to_monoid(close(CSignature::ba, A, {}))
        == trivial_monoid(A, DSignature::set));
  auto abstar = compile("(ab)*", AB);
  auto m6     = variety_to_monoid(close(CSignature::ba, AB, {abstar}));
  CHECK(m6.size() == 6);
  CHECK(m6 == transition_monoid(abstar));
  CHECK(m6.size() == oracle::transformation_closure_size(abstar));
}

TEST_CASE("variety_to_monoid matches the syntactic monoid", "[locvar]") {
  std::mt19937 rng(5);
  for (int round = 0; round < 60; ++round) {
    auto const& alphabet = round % 2 ? AB : A;
    auto        l        = random_language(rng, alphabet);
    auto        m        = variety_to_monoid(close(CSignature::ba, alphabet, {l}));
    REQUIRE(m == canonicalize(transition_monoid(l)));
    REQUIRE(m.size() == oracle::transformation_closure_size(l));
  }
}

TEST_CASE("monoid_to_variety examples", "[locvar]") {
  auto z2 = oracle::cyclic_monoid({0, 2});
  auto v  = monoid_to_variety(z2, CSignature::ba);
  CHECK(v.languages() == langs(A, {"0", "(aa)*", "a(aa)*", "a*"}));
  auto least = monoid_to_variety(trivial_monoid(AB, DSignature::pos),
                                 CSignature::dlat);
  CHECK(least.languages() == langs(AB, {"0", "(a|b)*"}));
  CHECK_THROWS_AS(monoid_to_variety(z2, CSignature::dlat), InputError);
}

TEST_CASE("round trip in all signatures", "[locvar]") {
  std::mt19937 rng(3);
  for (int round = 0; round < 40; ++round) {
    auto const& alphabet = round % 2 ? AB : A;
    std::vector<CanonicalDfa> gens{random_language(rng, alphabet, 6)};
    if (round % 3 == 0) {
      gens.push_back(random_language(rng, alphabet, 4));
    }
    for (auto c : all_csigs) {
      LocalVariety v;
      try {
        v = close(c, alphabet, gens, 1024);
      } catch (ResourceError const&) {
        continue;
      }
      auto g = variety_to_monoid(v);
      REQUIRE(g.dsig() == dual_of(c));
      REQUIRE(validate(g.monoid()).ok());
      REQUIRE(monoid_to_variety(g, c) == v);
      // the dual carrier has one element per homomorphism into 2
      REQUIRE(g.size() == homs_into_two(v.algebra()).size());
    }
  }
}

TEST_CASE("order correspondence", "[locvar]") {
  std::mt19937 rng(17);
  std::size_t  agreements = 0;
  for (int round = 0; round < 30; ++round) {
    auto const& alphabet = round % 2 ? AB : A;
    auto        c        = all_csigs[round % 4];
    auto        big      = close(c, alphabet, {random_language(rng, alphabet, 6)});
    for (int k = 0; k < 4; ++k) {
      auto const& l1 = big.language(rng() % big.size());
      auto const& l2 = big.language(rng() % big.size());
      auto        v1 = close(c, alphabet, {l1});
      auto        v2 = close(c, alphabet, {l2});
      auto        m1 = variety_to_monoid(v1);
      auto        m2 = variety_to_monoid(v2);
      REQUIRE(v1.subset_of(v2) == leq_quo(m1, m2).has_value());
      REQUIRE(v2.subset_of(v1) == leq_quo(m2, m1).has_value());
      ++agreements;
    }
  }
  CHECK(agreements == 120);
}

TEST_CASE("preimage closure examples", "[locvar]") {
  auto v = close(CSignature::ba, A, {compile("(aa)*", A)});
  FreeMorphism square(A, A, DSignature::set,
                      {FreeDElement::word(DSignature::set, {0, 0})});
  CHECK(check_preimage_closure(v, square, v));
  CHECK(check_preimage_closure(v, square, v, PreimageRoute::monoids));
  auto id = FreeMorphism::identity(A, DSignature::set);
  CHECK(check_preimage_closure(v, id, close(CSignature::ba, A, {})));
  auto least = close(CSignature::ba, A, {});
  CHECK_FALSE(check_preimage_closure(least, id, v));
  CHECK_FALSE(check_preimage_closure(least, id, v, PreimageRoute::monoids));
}

TEST_CASE("preimage routes agree with a word-level oracle", "[locvar]") {
  std::mt19937 rng(23);
  std::size_t  checked = 0, closed = 0;
  for (int round = 0; round < 16; ++round) {
    auto c = all_csigs[round % 4];
    auto d = dual_of(c);
    auto const& sigma = round % 8 < 4 ? A : AB;
    auto const& delta = round % 2 ? AB : A;
    auto v = close(c, sigma, {random_language(rng, sigma, 4)});
    auto w = close(c, delta, {random_language(rng, delta, 4)});
    auto fs = morphisms_up_to(sigma, delta, d, 2);
    std::shuffle(fs.begin(), fs.end(), rng);
    fs.resize(std::min<std::size_t>(fs.size(), 12));
    for (auto const& f : fs) {
      bool by_lang  = check_preimage_closure(v, f, w, PreimageRoute::languages);
      bool by_monoid = check_preimage_closure(v, f, w, PreimageRoute::monoids);
      REQUIRE(by_lang == by_monoid);
      // every preimage agrees with some language of v on short words
      bool oracle = true;
      auto words  = words_up_to(sigma.size(), 6);
      for (auto const& l : w.languages()) {
        bool found = false;
        for (auto const& k : v.languages()) {
          bool same = true;
          for (auto const& u : words) {
            if (oracle::member(l, f.apply(u)) != k.contains(u)) {
              same = false;
              break;
            }
          }
          if (same) {
            found = true;
            break;
          }
        }
        oracle = oracle && found;
      }
      REQUIRE(by_lang == oracle);
      closed += by_lang;
      ++checked;
    }
  }
  CHECK(checked > 50);
  CHECK(closed > 0);
  CHECK(closed < checked);
}
