// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria (capped at 1).
//
//   acceptance                 run every criterion
//   acceptance --only 3 7      run a subset
//   acceptance --artifacts F   write the determinism panel to F and exit

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "regvar/io.hpp"

using namespace regvar;
using oracle::Cyclic;

namespace {
  Alphabet const A  = Alphabet::parse("a");
  Alphabet const AB = Alphabet::parse("ab");

  CSignature const all_csigs[]
      = {CSignature::ba, CSignature::dlat, CSignature::slat, CSignature::z2vec};

  struct Outcome {
    bool        pass = true;
    std::string detail;
  };

  // Records the first failure; later ones only bump the count.
  struct Tally {
    std::size_t failures = 0;
    std::string first;

    void fail(std::string const& what) {
      if (failures++ == 0) {
        first = what;
      }
    }
    Outcome outcome(std::string const& summary) const {
      if (failures == 0) {
        return {true, summary};
      }
      return {false, summary + "; " + std::to_string(failures)
                         + " discrepancies, first: " + first};
    }
  };

  ////////////////////////////////////////////////////////////////////////
  // Regex sample
  ////////////////////////////////////////////////////////////////////////

  std::string random_regex(std::mt19937& rng, Alphabet const& a, int depth) {
    if (depth == 0 || rng() % 4 == 0) {
      auto r = rng() % 8;
      if (r == 0) {
        return "e";
      }
      if (r == 1) {
        return "0";
      }
      return a.symbol(rng() % a.size());
    }
    auto x = random_regex(rng, a, depth - 1);
    switch (rng() % 8) {
      case 0:
        return "(" + x + ")*";
      case 1:
        return "~(" + x + ")";
      case 2:
        return "(" + x + "|" + random_regex(rng, a, depth - 1) + ")";
      case 3:
        return "(" + x + "&" + random_regex(rng, a, depth - 1) + ")";
      case 4:
        return "(" + x + "^" + random_regex(rng, a, depth - 1) + ")";
      default:
        return "(" + x + ")(" + random_regex(rng, a, depth - 1) + ")";
    }
  }

  struct Sample {
    std::string  regex;
    Alphabet     alphabet;
    CanonicalDfa dfa;
  };

  // Distinct languages with at most 6 states whose transition monoid has at
  // most 8 elements: 60 over {a}, where random regexes rarely find more,
  // and 140 over {a,b}.
  std::vector<Sample> const& regex_sample() {
    static std::vector<Sample> const sample = [] {
      std::mt19937                             rng(2024);
      std::vector<Sample>                      out;
      std::set<std::pair<Alphabet, CanonicalDfa>> seen;
      for (std::size_t k = 0; out.size() < 200; ++k) {
        auto const& a = k % 2 ? AB : A;
        if (std::count_if(out.begin(), out.end(),
                          [&](Sample const& s) { return s.alphabet == a; })
            >= (a == A ? 60 : 140)) {
          continue;
        }
        auto r = random_regex(rng, a, 4);
        auto l = compile(r, a);
        if (l.size() > 6 || transition_monoid(l).size() > 8
            || !seen.emplace(a, l).second) {
          continue;
        }
        out.push_back({r, a, l});
      }
      return out;
    }();
    return sample;
  }

  ////////////////////////////////////////////////////////////////////////
  // Criteria
  ////////////////////////////////////////////////////////////////////////

  Outcome round_trip() {
    auto const&  sample = regex_sample();
    Tally        t;
    std::size_t  trips = 0, pairs = 0, included = 0;
    std::mt19937 rng(11);
    auto         start = std::chrono::steady_clock::now();
    for (auto c : all_csigs) {
      std::vector<LocalVariety> vs;
      for (auto const& s : sample) {
        auto v = close(c, s.alphabet, {s.dfa});
        auto g = variety_to_monoid(v);
        if (g.dsig() != dual_of(c) || monoid_to_variety(g, c) != v) {
          t.fail(std::string(to_string(c)) + " " + s.regex);
        }
        vs.push_back(std::move(v));
        ++trips;
      }
      for (int k = 0; k < 40; ++k) {
        auto const& v1 = vs[rng() % vs.size()];
        // half the pairs are comparable by construction
        LocalVariety v2;
        if (k % 2) {
          v2 = close(c, v1.alphabet(), {v1.language(rng() % v1.size())});
        } else {
          do {
            v2 = vs[rng() % vs.size()];
          } while (v2.alphabet() != v1.alphabet());
        }
        auto m1 = variety_to_monoid(v1);
        auto m2 = variety_to_monoid(v2);
        if (v1.subset_of(v2) != leq_quo(m1, m2).has_value()
            || v2.subset_of(v1) != leq_quo(m2, m1).has_value()) {
          t.fail("inclusion pair in " + std::string(to_string(c)));
        }
        included += v2.subset_of(v1);
        ++pairs;
      }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                      .count();
    if (secs >= 120) {
      t.fail("runtime " + std::to_string(secs) + "s");
    }
    return t.outcome(std::to_string(trips) + " round trips, " + std::to_string(pairs)
                     + " inclusion pairs (" + std::to_string(included)
                     + " included)");
  }

  Outcome syntactic_oracle() {
    Tally t;
    for (auto const& s : regex_sample()) {
      auto g = variety_to_monoid(close(CSignature::ba, s.alphabet, {s.dfa}));
      if (g != canonicalize(transition_monoid(s.dfa))
          || g.size() != oracle::transformation_closure_size(s.dfa)) {
        t.fail(s.regex);
      }
    }
    return t.outcome(std::to_string(regex_sample().size()) + " languages");
  }

  std::size_t brute(FiniteCAlgebra const& a) {
    return oracle::brute_homs_into_two(a.csig(), a.size(), a.plus_table(),
                                       a.meet_table(), a.complement_table(), a.zero(),
                                       a.one());
  }

  template <typename F>
  bool succeeds(F&& f) {
    try {
      f();
      return true;
    } catch (std::exception const&) {
      return false;
    }
  }

  // The BA map 2^m -> 2^k, S |-> phi^-1(S), for phi: k -> m.
  CAlgebraMorphism ba_map(std::size_t m, std::vector<std::size_t> const& phi) {
    auto              src = FiniteCAlgebra::boolean(m);
    auto              tgt = FiniteCAlgebra::boolean(phi.size());
    std::vector<Elem> table;
    for (Elem s = 0; s < src.size(); ++s) {
      Elem x = 0;
      for (std::size_t i = 0; i < phi.size(); ++i) {
        x |= (s >> phi[i] & 1) << i;
      }
      table.push_back(x);
    }
    return {src, tgt, table};
  }

  // The linear map Z2^m -> Z2^k whose column j is cols[j].
  CAlgebraMorphism z2_map(std::size_t k, std::vector<Elem> const& cols) {
    auto              src = FiniteCAlgebra::space(cols.size());
    auto              tgt = FiniteCAlgebra::space(k);
    std::vector<Elem> table;
    for (Elem v = 0; v < src.size(); ++v) {
      Elem x = 0;
      for (std::size_t j = 0; j < cols.size(); ++j) {
        if (v >> j & 1) {
          x ^= cols[j];
        }
      }
      table.push_back(x);
    }
    return {src, tgt, table};
  }

  template <typename M>
  M compose_tables(M const& g, M const& h) {
    std::vector<Elem> x;
    for (Elem e : h.table) {
      x.push_back(g(e));
    }
    return {h.source, g.target, x};
  }

  Outcome duality_soundness() {
    Tally       t;
    std::size_t algebras = 0, pairs = 0;
    for (std::size_t k = 0; k <= 4; ++k) {
      auto b = FiniteCAlgebra::boolean(k);
      if (homs_into_two(b).size() != brute(b) || !succeeds([&] { unit_iso(b); })) {
        t.fail("BA with " + std::to_string(k) + " atoms");
      }
      ++algebras;
    }
    for (std::size_t p = 0; p <= 5; ++p) {
      for (auto const& leq : oracle::natural_posets(p)) {
        auto poset = FiniteDObject::poset(p, leq);
        auto l     = FiniteCAlgebra::down_sets(poset);
        auto homs  = homs_into_two(l).size();
        if ((l.size() <= 16 && homs != brute(l))
            || homs != oracle::prime_filters(l.size(), l.plus_table(), l.zero())
            || homs != p || !succeeds([&] { unit_iso(l); })
            || !succeeds([&] { counit_iso(poset); })) {
          t.fail("DLAT on a poset of " + std::to_string(p) + " points");
        }
        ++algebras;
      }
    }
    for (std::size_t n = 1; n <= 8; ++n) {
      for (auto const& join : oracle::lattices(n)) {
        auto s   = FiniteCAlgebra::semilattice(n, join, 0);
        auto obj = FiniteDObject::semilattice(n, join, 0);
        if (homs_into_two(s).size() != brute(s) || homs_into_two(s).size() != n
            || !succeeds([&] { unit_iso(s); }) || d_maps_into_two(obj).size() != n
            || !succeeds([&] { counit_iso(obj); })) {
          t.fail("SLAT of size " + std::to_string(n));
        }
        ++algebras;
      }
    }
    for (std::size_t dim = 0; dim <= 4; ++dim) {
      auto v = FiniteCAlgebra::space(dim);
      if (homs_into_two(v).size() != brute(v) || !succeeds([&] { unit_iso(v); })
          || !succeeds([&] { counit_iso(FiniteDObject::space(dim)); })) {
        t.fail("Z2 space of dim " + std::to_string(dim));
      }
      ++algebras;
    }
    std::mt19937 rng(7);
    auto         pick = [&](std::size_t n) { return std::size_t(rng() % n); };
    for (int round = 0; round < 60; ++round) {
      std::size_t              a = 1 + pick(3), b = 1 + pick(3), c = 1 + pick(3);
      std::vector<std::size_t> phi(b), psi(c);
      for (auto& x : phi) {
        x = pick(a);
      }
      for (auto& x : psi) {
        x = pick(b);
      }
      auto h = ba_map(a, phi);
      auto g = ba_map(b, psi);
      if (dual_morphism(compose_tables(g, h))
          != compose_tables(dual_morphism(h), dual_morphism(g))) {
        t.fail("BA functoriality");
      }
      ++pairs;
    }
    for (int round = 0; round < 60; ++round) {
      std::size_t       a = 1 + pick(3), b = 1 + pick(3), c = 1 + pick(3);
      std::vector<Elem> hc(a), gc(b);
      for (auto& x : hc) {
        x = static_cast<Elem>(pick(std::size_t(1) << b));
      }
      for (auto& x : gc) {
        x = static_cast<Elem>(pick(std::size_t(1) << c));
      }
      auto h = z2_map(b, hc);
      auto g = z2_map(c, gc);
      if (dual_morphism(compose_tables(g, h))
          != compose_tables(dual_morphism(h), dual_morphism(g))) {
        t.fail("Z2 functoriality");
      }
      ++pairs;
    }
    return t.outcome(std::to_string(algebras) + " algebras, " + std::to_string(pairs)
                     + " composable pairs");
  }

  Outcome preimage_routes() {
    Tally       t;
    std::size_t checks = 0, closed = 0;
    auto const& sample = regex_sample();
    for (auto c : all_csigs) {
      auto d = dual_of(c);
      std::vector<LocalVariety> over_a, over_ab;
      for (auto const& s : sample) {
        (s.alphabet == A ? over_a : over_ab).push_back(close(c, s.alphabet, {s.dfa}));
      }
      auto sources = [&](Alphabet const& sigma) {
        auto const&               all = sigma == A ? over_a : over_ab;
        std::vector<LocalVariety> out;
        for (std::size_t i = 0; i < all.size(); i += all.size() / 3) {
          out.push_back(all[i]);
        }
        return out;
      };
      std::map<std::pair<Alphabet, Alphabet>, std::vector<FreeMorphism>> fs;
      for (auto const& sigma : {A, AB}) {
        for (auto const& delta : {A, AB}) {
          for (auto& f : morphisms_up_to(sigma, delta, d, 2)) {
            // set-valued images carry at most two words
            bool small = true;
            for (auto const& x : f.images()) {
              small = small && x.words().size() <= 2;
            }
            if (small) {
              fs[{sigma, delta}].push_back(std::move(f));
            }
          }
        }
      }
      for (auto const* ws : {&over_a, &over_ab}) {
        for (auto const& w : *ws) {
          for (auto const& sigma : {A, AB}) {
            auto vs = sources(sigma);
            if (sigma == w.alphabet()) {
              vs.push_back(w);
            }
            for (auto const& v : vs) {
              for (auto const& f : fs[{sigma, w.alphabet()}]) {
                bool by_lang = check_preimage_closure(v, f, w, PreimageRoute::languages);
                bool by_monoid = check_preimage_closure(v, f, w, PreimageRoute::monoids);
                if (by_lang != by_monoid) {
                  t.fail(std::string(to_string(c)) + " along " + f.to_string());
                }
                closed += by_lang;
                ++checks;
              }
            }
          }
        }
      }
    }
    return t.outcome(std::to_string(checks) + " checks (" + std::to_string(closed)
                     + " closed)");
  }

  Outcome subdirect_join() {
    Tally       t;
    auto        small      = enumerate_generated(A, DSignature::set, 4);
    auto        candidates = enumerate_generated(A, DSignature::set, 16);
    std::size_t pairs      = 0;
    auto        cyclic     = [](GeneratedDMonoid const& g) {
      for (auto c : oracle::cyclic_up_to(16)) {
        if (canonicalize(oracle::cyclic_monoid(c)) == g) {
          return c;
        }
      }
      throw InvariantError("not cyclic");
    };
    for (auto const& x : small) {
      for (auto const& y : small) {
        auto s = canonicalize(subdirect(x, y));
        if (!leq_quo(x, s) || !leq_quo(y, s)) {
          t.fail("not an upper bound: " + x.describe() + ", " + y.describe());
        }
        for (auto const& z : candidates) {
          if (leq_quo(x, z) && leq_quo(y, z) && !leq_quo(s, z)) {
            t.fail("not least: " + x.describe() + ", " + y.describe());
          }
        }
        if (s != canonicalize(oracle::cyclic_monoid(oracle::join(cyclic(x), cyclic(y))))) {
          t.fail("differs from cyclic arithmetic");
        }
        ++pairs;
      }
    }
    return t.outcome(std::to_string(pairs) + " pairs against "
                     + std::to_string(candidates.size()) + " upper-bound candidates");
  }

  // Σ-generated SET monoids of size <= 4 and morphisms of payload <= 2
  // between {a} and {a,b}.
  std::vector<GeneratedDMonoid> const& grid_monoids(Alphabet const& a) {
    static auto const one = enumerate_generated(A, DSignature::set, 4);
    static auto const two = enumerate_generated(AB, DSignature::set, 4);
    return a == A ? one : two;
  }

  Outcome pushforward_functoriality() {
    Tally       t;
    std::size_t combos = 0, checks = 0;
    // Candidates of size 6 into {a} but 4 into {a,b}: size 6 there would
    // mean about 2*10^8 memberships.
    std::map<Alphabet, std::vector<GeneratedDMonoid>> candidates;
    candidates[A]  = enumerate_generated(A, DSignature::set, 6);
    candidates[AB] = enumerate_generated(AB, DSignature::set, 4);
    for (auto const& sigma : {A, AB}) {
      for (auto const& mid : {A, AB}) {
        for (auto const& delta : {A, AB}) {
          auto fs = morphisms_up_to(sigma, mid, DSignature::set, 2);
          auto gs = morphisms_up_to(mid, delta, DSignature::set, 2);
          for (auto const& m : grid_monoids(sigma)) {
            auto p = LocalPseudovariety::principal(m);
            for (auto const& f : fs) {
              auto pf = pushforward_pseudovariety(f, p);
              for (auto const& g : gs) {
                auto one = pushforward_pseudovariety(compose(f, g), p);
                auto two = pushforward_pseudovariety(g, pf);
                for (auto const& n : candidates[delta]) {
                  if (one.contains(n) != two.contains(n)) {
                    t.fail(m.describe() + " along " + f.to_string() + " then "
                           + g.to_string() + " at " + n.describe());
                  }
                  ++checks;
                }
                ++combos;
              }
            }
          }
        }
      }
    }
    return t.outcome(std::to_string(combos) + " generator/morphism combinations, "
                     + std::to_string(checks) + " memberships");
  }

  Outcome square_sweep() {
    Tally       t;
    std::size_t squares = 0, skipped = 0;
    for (auto const& sigma : {A, AB}) {
      for (auto const& m : grid_monoids(sigma)) {
        auto v = monoid_to_variety(m, CSignature::ba);
        for (auto const& delta : {A, AB}) {
          // two-letter codomains cannot enumerate 8-state automata
          std::size_t size = delta == A ? 6 : 4, states = delta == A ? 8 : 3;
          for (auto const& f : morphisms_up_to(sigma, delta, DSignature::set, 2)) {
            auto verdict = square_check(f, v, size, states);
            if (!verdict) {
              t.fail(m.describe() + " along " + f.to_string() + ": " + verdict.witness);
            } else if (!verdict.witness.empty()) {
              ++skipped;
            }
            ++squares;
          }
        }
      }
    }
    return t.outcome(std::to_string(squares) + " squares (8 states/size 6 into {a}, "
                     "3 states/size 4 into {a,b}), " + std::to_string(skipped)
                     + " with skipped languages");
  }

  std::set<GeneratedDMonoid> below(Cyclic c) {
    std::set<GeneratedDMonoid> out;
    for (auto d : oracle::cyclic_up_to(c.size())) {
      if (oracle::quotient_of(d, c)) {
        out.insert(canonicalize(oracle::cyclic_monoid(d)));
      }
    }
    return out;
  }

  Outcome recovery() {
    Tally       t;
    auto        cs      = oracle::cyclic_up_to(4);
    std::size_t checked = 0;
    for (std::size_t mask = 1; mask < (1u << cs.size()); ++mask) {
      std::vector<GeneratedDMonoid> gens;
      Cyclic                        top{0, 1};
      for (std::size_t i = 0; i < cs.size(); ++i) {
        if (mask >> i & 1) {
          gens.push_back(oracle::cyclic_monoid(cs[i]));
          top = oracle::join(top, cs[i]);
        }
      }
      auto m     = limit_of(gens);
      auto ideal = recover_ideal(m, m.base.size());
      std::set<GeneratedDMonoid> got;
      for (auto const& q : ideal.elements()) {
        got.insert(canonicalize(q));
      }
      if (got != below(top)) {
        t.fail("generator mask " + std::to_string(mask));
      }
      ++checked;
    }
    return t.outcome(std::to_string(checked) + " generator sets");
  }

  Outcome truncated_round_trip() {
    Tally       t;
    std::size_t checks = 0;
    for (auto [alphabet, bound] : {std::pair{A, std::size_t(6)}, std::pair{AB, std::size_t(4)}}) {
      auto sample = enumerate_generated(alphabet, DSignature::set, bound);
      for (auto const& name : {"all", "idempotent", "commutative", "x2=x3"}) {
        auto p  = named_predicate(name, DSignature::set);
        auto th = truncated_theory(p, {alphabet}, bound);
        for (auto const& g : sample) {
          if (pseudovariety_from_theory(th, g).holds != p(g.monoid())) {
            t.fail(std::string(name) + " at " + g.describe());
          }
          ++checks;
        }
        for (auto const& failure : theory_closure_check(th, sample)) {
          t.fail(std::string(name) + " closure: " + failure);
        }
      }
    }
    return t.outcome(std::to_string(checks) + " memberships, closure checks on the same "
                                              "enumerations");
  }

  Outcome parity_kernel() {
    using P = std::pair<FreeDElement, FreeDElement>;
    auto m  = transition_monoid(compile("(aa)*", A));
    // a^i and a^j act alike on (aa)* exactly when i and j have equal parity
    std::vector<P> expected;
    for (std::size_t i = 0; i <= 3; ++i) {
      for (std::size_t j = i + 1; j <= 3; ++j) {
        if (i % 2 == j % 2) {
          expected.emplace_back(FreeDElement::word(DSignature::set, Word(i, 0)),
                                FreeDElement::word(DSignature::set, Word(j, 0)));
        }
      }
    }
    std::sort(expected.begin(), expected.end());
    auto got = kernel_pairs(m, 3);
    if (got != expected || expected.size() != 2) {
      return {false, kernel_pairs_to_json(got, A).dump()};
    }
    return {true, kernel_pairs_to_json(got, A).dump()};
  }

  // A fixed panel of outputs from every module.
  Json artifacts() {
    Json out;
    auto const& sample = regex_sample();
    for (std::size_t i = 0; i < sample.size(); i += 10) {
      auto const& s = sample[i];
      Json        entry;
      entry["regex"] = s.regex;
      entry["dfa"]   = to_json(s.dfa);
      for (auto c : all_csigs) {
        auto v = close(c, s.alphabet, {s.dfa});
        entry[std::string(to_string(c))] = {{"variety", to_json(v)},
                                            {"monoid", to_json(variety_to_monoid(v))}};
      }
      out["closures"].push_back(entry);
    }
    auto cyc = grid_monoids(A);
    auto lim = limit_of(cyc);
    out["limit"]   = to_json(lim);
    out["ideal"]   = to_json(recover_ideal(lim, lim.base.size()));
    out["quo_dot"] = quo_dot(cyc);
    out["kernel"]  = kernel_pairs_to_json(kernel_pairs(lim.base, 4), A);
    auto th = truncated_theory(named_predicate("commutative", DSignature::set), {A, AB}, 3);
    for (auto const& [a, m] : th.entries) {
      out["theory"].push_back(to_json(m));
    }
    auto v = monoid_to_variety(oracle::cyclic_monoid({1, 2}), CSignature::ba);
    auto f = morphisms_up_to(A, AB, DSignature::set, 2);
    for (auto const& g : f) {
      out["squares"].push_back(to_json(square_check(g, v, 4, 3)));
    }
    return out;
  }

  std::string slurp(std::string const& path) {
    std::ifstream      in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  Outcome determinism(std::string const& self) {
    auto once  = artifacts().dump(1);
    auto twice = artifacts().dump(1);
    if (once != twice) {
      return {false, "two in-process runs differ"};
    }
    // separate processes, so no state survives between the runs
    std::vector<std::string> files;
    for (int run = 0; run < 2; ++run) {
      files.push_back("acceptance_artifacts_" + std::to_string(run) + ".json");
      auto cmd = "\"" + self + "\" --artifacts " + files.back();
      if (std::system(cmd.c_str()) != 0) {
        return {false, "artifact run failed: " + cmd};
      }
    }
    auto a = slurp(files[0]), b = slurp(files[1]);
    if (a != b || a != once + "\n") {
      return {false, "artifact files differ"};
    }
    return {true, std::to_string(a.size()) + " bytes identical across 2 processes and "
                                             "2 in-process runs"};
  }
}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.size() == 2 && args[0] == "--artifacts") {
    std::ofstream(args[1], std::ios::binary) << artifacts().dump(1) << "\n";
    return 0;
  }
  std::set<int> only;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] != "--only") {
      only.insert(std::stoi(args[i]));
    }
  }
  std::string const self = argv[0];
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"round trip through the dual monoid", round_trip},
      {"syntactic monoid oracle", syntactic_oracle},
      {"duality soundness", duality_soundness},
      {"preimage closure routes agree", preimage_routes},
      {"subdirect product is the join", subdirect_join},
      {"pushforward functoriality", pushforward_functoriality},
      {"square sweep", square_sweep},
      {"ideal recovery from the limit", recovery},
      {"truncated theory round trip", truncated_round_trip},
      {"parity kernel pairs", parity_kernel},
      {"determinism", [&] { return determinism(self); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    int n = static_cast<int>(i) + 1;
    if (!only.empty() && !only.count(n)) {
      continue;
    }
    auto    start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs
        = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line.precision(1);
    line << std::fixed << (o.pass ? "PASS" : "FAIL") << " criterion " << n << " ("
         << criteria[i].first << "): " << o.detail << " [" << secs << "s]";
    std::cout << line.str() << std::endl;
    failed += !o.pass;
  }
  return failed > 0;
}
