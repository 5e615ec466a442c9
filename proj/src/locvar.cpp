//
// regvar - regular languages, finite D-monoids and their dualities
//

#include "regvar/locvar.hpp"

#include <algorithm>  // for sort, unique, binary_search
#include <map>        // for map
#include <memory>     // for shared_ptr
#include <mutex>      // for mutex, lock_guard
#include <set>        // for set

namespace regvar {

  using State = CanonicalDfa::State;

  ////////////////////////////////////////////////////////////////////////
  // Word values
  ////////////////////////////////////////////////////////////////////////

  namespace {
    bool has_top(CSignature c) {
      return c == CSignature::ba || c == CSignature::dlat;
    }

    // The distinct membership vectors [w in L_i] over all words w, each
    // with its shortlex-least representative and the state every DFA is in
    // after reading it.
    struct WordValues {
      std::vector<CanonicalDfa> const* languages = nullptr;
      std::vector<Word>                reps;
      std::vector<std::vector<State>>  states;
      std::vector<HomVec>              values;
      std::map<HomVec, std::size_t>    id;
      // words rep[i] a whose value was already known: (i, a, value index)
      std::vector<std::tuple<std::size_t, Letter, std::size_t>> collisions;

      HomVec value_of(std::vector<State> const& s) const {
        HomVec v(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
          v[i] = (*languages)[i].accepting(s[i]);
        }
        return v;
      }

      std::vector<State> run(std::vector<State> s, Word const& w) const {
        for (std::size_t i = 0; i < s.size(); ++i) {
          s[i] = (*languages)[i].run(s[i], w);
        }
        return s;
      }

      std::vector<State> start() const {
        std::vector<State> s;
        for (auto const& l : *languages) {
          s.push_back(l.initial());
        }
        return s;
      }

      // Index of the value of the word rep[j] w.
      std::size_t extend(std::size_t j, Word const& w) const {
        auto it = id.find(value_of(run(states[j], w)));
        if (it == id.end()) {
          throw InvariantError("word value missed by the breadth-first search");
        }
        return it->second;
      }
    };

    WordValues word_values(std::vector<CanonicalDfa> const& ls,
                           std::size_t                      alphabet_size,
                           std::size_t limit = 1 << 16) {
      WordValues wv;
      wv.languages = &ls;
      auto s0      = wv.start();
      auto v0      = wv.value_of(s0);
      wv.id[v0]    = 0;
      wv.reps.push_back({});
      wv.states.push_back(std::move(s0));
      wv.values.push_back(std::move(v0));
      for (std::size_t i = 0; i < wv.reps.size(); ++i) {
        for (Letter a = 0; a < alphabet_size; ++a) {
          auto s = wv.states[i];
          for (std::size_t k = 0; k < ls.size(); ++k) {
            s[k] = ls[k].next(s[k], a);
          }
          auto v = wv.value_of(s);
          if (auto it = wv.id.find(v); it != wv.id.end()) {
            wv.collisions.emplace_back(i, a, it->second);
            continue;
          }
          if (wv.reps.size() == limit) {
            throw ResourceError("more than " + std::to_string(limit)
                                + " word values");
          }
          Word w = wv.reps[i];
          w.push_back(a);
          wv.id[v] = wv.reps.size();
          wv.reps.push_back(std::move(w));
          wv.states.push_back(std::move(s));
          wv.values.push_back(std::move(v));
        }
      }
      return wv;
    }

    // profile[i][j] = [reps[j] in L_i]; languages of a derivative-closed set
    // are equal iff their profiles are.
    std::vector<HomVec> profiles(WordValues const& wv, std::size_t n) {
      std::vector<HomVec> out(n, HomVec(wv.reps.size()));
      for (std::size_t j = 0; j < wv.reps.size(); ++j) {
        for (std::size_t i = 0; i < n; ++i) {
          out[i][j] = wv.values[j][i];
        }
      }
      return out;
    }

    void check_alphabets(Alphabet const&                  alphabet,
                         std::vector<CanonicalDfa> const& ls) {
      for (auto const& l : ls) {
        if (l.alphabet() != alphabet) {
          throw InputError("language over a different alphabet");
        }
      }
    }

    // The monoid automaton: states M, start 1, transitions x |-> x g(a).
    CanonicalDfa monoid_automaton(GeneratedDMonoid const& g,
                                  std::vector<bool>       accepting) {
      auto const&        m = g.monoid();
      std::size_t const  k = g.alphabet().size();
      std::vector<State> delta(m.size() * k);
      for (Elem x = 0; x < m.size(); ++x) {
        for (Letter a = 0; a < k; ++a) {
          delta[x * k + a] = m.mult(x, g.gen(a));
        }
      }
      return CanonicalDfa::from_dfa(g.alphabet(), m.size(), m.unit(),
                                    std::move(delta), std::move(accepting));
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // LocalVariety
  ////////////////////////////////////////////////////////////////////////

  struct VarietyBuilder {
    static LocalVariety make(CSignature                csig,
                             Alphabet                  alphabet,
                             std::vector<CanonicalDfa> languages) {
      std::sort(languages.begin(), languages.end());
      languages.erase(std::unique(languages.begin(), languages.end()),
                      languages.end());
      LocalVariety v;
      v._csig      = csig;
      v._alphabet  = std::move(alphabet);
      v._languages = std::move(languages);
      return v;
    }
  };

  LocalVariety::LocalVariety(CSignature                csig,
                             Alphabet                  alphabet,
                             std::vector<CanonicalDfa> languages) {
    check_alphabets(alphabet, languages);
    *this = VarietyBuilder::make(csig, std::move(alphabet), std::move(languages));
    if (auto v = violations(_csig, _alphabet, _languages); !v.empty()) {
      throw InputError("not a local variety: " + v.front());
    }
  }

  std::optional<std::size_t> LocalVariety::index(CanonicalDfa const& l) const {
    auto it = std::lower_bound(_languages.begin(), _languages.end(), l);
    if (it == _languages.end() || *it != l) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - _languages.begin());
  }

  bool LocalVariety::subset_of(LocalVariety const& that) const {
    return std::includes(that._languages.begin(), that._languages.end(),
                         _languages.begin(), _languages.end());
  }

  std::vector<std::string>
  LocalVariety::violations(CSignature                       csig,
                           Alphabet const&                  alphabet,
                           std::vector<CanonicalDfa> const& ls) {
    std::vector<std::string> out;
    auto member = [&](CanonicalDfa const& l) {
      return std::binary_search(ls.begin(), ls.end(), l);
    };
    if (!member(CanonicalDfa::empty_language(alphabet))) {
      out.push_back("the empty language is missing");
    }
    if (has_top(csig) && !member(CanonicalDfa::full_language(alphabet))) {
      out.push_back("the full language is missing");
    }
    for (std::size_t i = 0; i < ls.size(); ++i) {
      for (Letter a = 0; a < alphabet.size(); ++a) {
        if (!member(left_derivative(ls[i], a))) {
          out.push_back("left derivative of language " + std::to_string(i)
                        + " by " + alphabet.symbol(a) + " is missing");
        }
        if (!member(right_derivative(ls[i], a))) {
          out.push_back("right derivative of language " + std::to_string(i)
                        + " by " + alphabet.symbol(a) + " is missing");
        }
      }
    }
    if (!out.empty()) {
      return out;
    }
    // Closed under derivatives, so profiles decide equality.
    auto wv = word_values(ls, alphabet.size());
    auto pr = profiles(wv, ls.size());
    std::set<HomVec> known(pr.begin(), pr.end());
    auto combine = [&](HomVec const& x, HomVec const& y, int op) {
      HomVec z(x.size());
      for (std::size_t k = 0; k < x.size(); ++k) {
        z[k] = op == 0 ? (x[k] | y[k]) : op == 1 ? (x[k] & y[k]) : (x[k] ^ y[k]);
      }
      return z;
    };
    for (std::size_t i = 0; i < ls.size(); ++i) {
      if (csig == CSignature::ba) {
        HomVec c = pr[i];
        for (auto& b : c) {
          b = !b;
        }
        if (!known.count(c)) {
          out.push_back("complement of language " + std::to_string(i)
                        + " is missing");
        }
      }
      for (std::size_t j = i + 1; j < ls.size(); ++j) {
        if (csig == CSignature::z2vec) {
          if (!known.count(combine(pr[i], pr[j], 2))) {
            out.push_back("symmetric difference of languages "
                          + std::to_string(i) + " and " + std::to_string(j)
                          + " is missing");
          }
          continue;
        }
        if (!known.count(combine(pr[i], pr[j], 0))) {
          out.push_back("union of languages " + std::to_string(i) + " and "
                        + std::to_string(j) + " is missing");
        }
        if (has_top(csig) && !known.count(combine(pr[i], pr[j], 1))) {
          out.push_back("intersection of languages " + std::to_string(i)
                        + " and " + std::to_string(j) + " is missing");
        }
      }
    }
    return out;
  }

  FiniteCAlgebra LocalVariety::algebra() const {
    std::size_t const n  = size();
    auto              wv = word_values(_languages, _alphabet.size());
    auto              pr = profiles(wv, n);
    std::map<HomVec, Elem> id;
    for (Elem i = 0; i < n; ++i) {
      id[pr[i]] = i;
    }
    auto lookup = [&](HomVec const& p) {
      auto it = id.find(p);
      if (it == id.end()) {
        throw InvariantError("local variety is not closed");
      }
      return it->second;
    };
    auto table = [&](auto&& f) {
      std::vector<Elem> t(n * n);
      for (Elem i = 0; i < n; ++i) {
        for (Elem j = 0; j < n; ++j) {
          HomVec z(pr[i].size());
          for (std::size_t k = 0; k < z.size(); ++k) {
            z[k] = f(pr[i][k], pr[j][k]);
          }
          t[i * n + j] = lookup(z);
        }
      }
      return t;
    };
    Elem zero = lookup(HomVec(wv.reps.size(), 0));
    switch (_csig) {
      case CSignature::ba: {
        std::vector<Elem> compl_(n);
        for (Elem i = 0; i < n; ++i) {
          HomVec c = pr[i];
          for (auto& b : c) {
            b = !b;
          }
          compl_[i] = lookup(c);
        }
        return FiniteCAlgebra(_csig, n, table([](auto x, auto y) { return x | y; }),
                              table([](auto x, auto y) { return x & y; }),
                              std::move(compl_), zero,
                              lookup(HomVec(wv.reps.size(), 1)));
      }
      case CSignature::dlat:
        return FiniteCAlgebra(_csig, n, table([](auto x, auto y) { return x | y; }),
                              table([](auto x, auto y) { return x & y; }), {},
                              zero, lookup(HomVec(wv.reps.size(), 1)));
      case CSignature::slat:
        return FiniteCAlgebra::semilattice(
            n, table([](auto x, auto y) { return x | y; }), zero);
      case CSignature::z2vec:
        break;
    }
    return FiniteCAlgebra(_csig, n, table([](auto x, auto y) { return x ^ y; }),
                          {}, {}, zero, 0);
  }

  ////////////////////////////////////////////////////////////////////////
  // close
  ////////////////////////////////////////////////////////////////////////

  LocalVariety close(CSignature                       csig,
                     Alphabet const&                  alphabet,
                     std::vector<CanonicalDfa> const& generators,
                     std::size_t                      limit) {
    check_alphabets(alphabet, generators);
    // Every language produced is recognized by the joint transition monoid
    // of the generators, so languages are subsets of it.
    Ambient           amb;
    std::vector<bool> accepting;
    std::vector<State> initial;
    amb.dsig     = DSignature::set;
    amb.alphabet = alphabet;
    amb.gens.resize(alphabet.size());
    for (auto const& l : generators) {
      State const offset = static_cast<State>(amb.unit.size());
      initial.push_back(offset + l.initial());
      for (State q = 0; q < l.size(); ++q) {
        amb.unit.push_back(offset + q);
        accepting.push_back(l.accepting(q));
        for (Letter a = 0; a < alphabet.size(); ++a) {
          amb.gens[a].push_back(offset + l.next(q, a));
        }
      }
    }
    amb.mult = [](Key const& x, Key const& y) {
      Key z(x.size());
      for (std::size_t q = 0; q < x.size(); ++q) {
        z[q] = y[x[q]];
      }
      return z;
    };
    auto const        gm = generate(amb);
    auto const&       m  = gm.monoid.monoid();
    std::size_t const n  = m.size();

    using Bits = std::vector<bool>;
    std::set<Bits>    seen;
    std::vector<Bits> list;
    auto              add = [&](Bits b) {
      if (seen.insert(b).second) {
        if (list.size() == limit) {
          throw ResourceError("local variety exceeds " + std::to_string(limit)
                              + " languages");
        }
        list.push_back(std::move(b));
      }
    };
    for (std::size_t i = 0; i < generators.size(); ++i) {
      Bits b(n);
      for (Elem x = 0; x < n; ++x) {
        b[x] = accepting[gm.keys[x][initial[i]]];
      }
      add(std::move(b));
    }
    add(Bits(n, false));
    if (has_top(csig)) {
      add(Bits(n, true));
    }
    std::size_t derived = 0;  // list[0, derived) has its derivatives in list
    std::size_t combined = 0; // list[0, combined) is closed under operations
    while (derived < list.size() || combined < list.size()) {
      for (; derived < list.size(); ++derived) {
        for (Letter a = 0; a < alphabet.size(); ++a) {
          Elem g = gm.monoid.gen(a);
          Bits left(n), right(n);
          for (Elem x = 0; x < n; ++x) {
            left[x]  = list[derived][m.mult(g, x)];
            right[x] = list[derived][m.mult(x, g)];
          }
          add(std::move(left));
          add(std::move(right));
        }
      }
      for (; combined < list.size(); ++combined) {
        if (csig == CSignature::ba) {
          Bits c = list[combined];
          c.flip();
          add(std::move(c));
        }
        for (std::size_t j = 0; j <= combined; ++j) {
          Bits u(n), v(n);
          for (Elem x = 0; x < n; ++x) {
            bool p = list[combined][x], q = list[j][x];
            u[x]   = csig == CSignature::z2vec ? p != q : p || q;
            v[x]   = p && q;
          }
          add(std::move(u));
          if (has_top(csig)) {
            add(std::move(v));
          }
        }
      }
    }
    std::vector<CanonicalDfa> languages;
    for (auto const& b : list) {
      languages.push_back(monoid_automaton(gm.monoid, b));
    }
    return VarietyBuilder::make(csig, alphabet, std::move(languages));
  }

  Coalgebra coalgebra_structure(LocalVariety const& v) {
    Coalgebra c;
    for (auto const& l : v.languages()) {
      c.gamma1.push_back(l.contains_empty_word());
      std::vector<std::size_t> row;
      for (Letter a = 0; a < v.alphabet().size(); ++a) {
        auto i = v.index(left_derivative(l, a));
        if (!i) {
          throw InvariantError("a left derivative leaves the local variety");
        }
        row.push_back(*i);
      }
      c.gamma2.push_back(std::move(row));
    }
    return c;
  }

  ////////////////////////////////////////////////////////////////////////
  // The dual monoid
  ////////////////////////////////////////////////////////////////////////

  namespace {
    Generated compute_generated(LocalVariety const& v);
  }

  // Sweeps dualize the same few varieties over and over; keep the recent
  // ones. The cache is dropped wholesale when it fills.
  Generated variety_to_generated(LocalVariety const& v) {
    static std::mutex                         mutex;
    static std::map<LocalVariety, Generated> cache;
    {
      std::lock_guard<std::mutex> lock(mutex);
      if (auto it = cache.find(v); it != cache.end()) {
        return it->second;
      }
    }
    auto g = compute_generated(v);
    std::lock_guard<std::mutex> lock(mutex);
    if (cache.size() >= 512) {
      cache.clear();
    }
    cache.emplace(v, g);
    return g;
  }

  namespace {
  Generated compute_generated(LocalVariety const& v) {
    std::size_t const N  = v.size();
    auto const&       ls = v.languages();
    auto              wv = word_values(ls, v.alphabet().size());
    std::size_t const W  = wv.reps.size();

    // e(u) = e(u') must imply e(xu) = e(xu') and e(ux) = e(u'x).
    for (auto [i, a, j] : wv.collisions) {
      Word u = wv.reps[i];
      u.push_back(a);
      auto su = wv.run(wv.start(), u);
      for (std::size_t k = 0; k < W; ++k) {
        Word const& x = wv.reps[k];
        if (wv.value_of(wv.run(su, x)) != wv.values[wv.extend(j, x)]) {
          throw InvariantError("evaluation is not a right congruence");
        }
        Word xu = x;
        xu.insert(xu.end(), u.begin(), u.end());
        if (wv.extend(0, xu) != wv.extend(k, wv.reps[j])) {
          throw InvariantError("evaluation is not a left congruence");
        }
      }
    }
    std::vector<std::size_t> prod(W * W);
    for (std::size_t j = 0; j < W; ++j) {
      for (std::size_t k = 0; k < W; ++k) {
        prod[j * W + k] = wv.extend(j, wv.reps[k]);
      }
    }

    auto to_key = [](HomVec const& h) { return Key(h.begin(), h.end()); };
    Ambient amb;
    amb.dsig     = dual_of(v.csig());
    amb.alphabet = v.alphabet();
    amb.unit     = to_key(wv.values[0]);
    for (Letter a = 0; a < v.alphabet().size(); ++a) {
      amb.gens.push_back(to_key(wv.values[wv.extend(0, Word{a})]));
    }
    std::map<Key, std::size_t> word_id;
    for (std::size_t j = 0; j < W; ++j) {
      word_id[to_key(wv.values[j])] = j;
    }
    if (is_word_based(amb.dsig)) {
      amb.mult = [=](Key const& x, Key const& y) {
        return to_key(wv.values[prod[word_id.at(x) * W + word_id.at(y)]]);
      };
      amb.leq = [](Key const& x, Key const& y) {
        for (std::size_t i = 0; i < x.size(); ++i) {
          if (x[i] > y[i]) {
            return false;
          }
        }
        return true;
      };
    } else {
      // Sums of word values, each key remembered with one decomposition.
      bool const xor_ = amb.dsig == DSignature::z2vec;
      auto decomp = std::make_shared<std::map<Key, std::vector<bool>>>();
      for (std::size_t j = 0; j < W; ++j) {
        std::vector<bool> d(W, false);
        d[j]                                = true;
        (*decomp)[to_key(wv.values[j])]     = d;
      }
      amb.zero           = Key(N, 0);
      (*decomp)[amb.zero] = std::vector<bool>(W, false);
      auto sum = [=](std::vector<bool> const& d) {
        Key k(N, 0);
        for (std::size_t j = 0; j < W; ++j) {
          if (d[j]) {
            for (std::size_t i = 0; i < N; ++i) {
              k[i] = xor_ ? k[i] ^ wv.values[j][i] : k[i] | wv.values[j][i];
            }
          }
        }
        decomp->emplace(k, d);
        return k;
      };
      amb.plus = [=](Key const& x, Key const& y) {
        auto const& dx = decomp->at(x);
        auto const& dy = decomp->at(y);
        std::vector<bool> d(W);
        for (std::size_t j = 0; j < W; ++j) {
          d[j] = xor_ ? dx[j] != dy[j] : dx[j] || dy[j];
        }
        return sum(d);
      };
      amb.mult = [=](Key const& x, Key const& y) {
        auto const& dx = decomp->at(x);
        auto const& dy = decomp->at(y);
        std::vector<bool> d(W, false);
        for (std::size_t j = 0; j < W; ++j) {
          for (std::size_t k = 0; k < W; ++k) {
            if (dx[j] && dy[k]) {
              auto p = prod[j * W + k];
              d[p]   = xor_ ? !d[p] : true;
            }
          }
        }
        return sum(d);
      };
    }
    auto result = generate(amb);
    if (result.monoid.size() != homs_into_two(v.algebra()).size()) {
      throw InvariantError("evaluation does not reach every homomorphism "
                           "into 2");
    }
    return result;
  }
  }  // namespace

  GeneratedDMonoid variety_to_monoid(LocalVariety const& v) {
    return variety_to_generated(v).monoid;
  }

  CanonicalDfa recognized_language(GeneratedDMonoid const&          g,
                                   std::vector<std::uint8_t> const& p) {
    if (p.size() != g.size()) {
      throw InputError("map size differs from the monoid size");
    }
    return monoid_automaton(g, std::vector<bool>(p.begin(), p.end()));
  }

  LocalVariety monoid_to_variety(GeneratedDMonoid const& g, CSignature csig) {
    if (dual_of(csig) != g.dsig()) {
      throw InputError(std::string(to_string(csig)) + " is not dual to "
                       + std::string(to_string(g.dsig())));
    }
    std::vector<CanonicalDfa> languages;
    for (auto const& p : d_maps_into_two(g.monoid().carrier())) {
      languages.push_back(recognized_language(g, p));
    }
    return VarietyBuilder::make(csig, g.alphabet(), std::move(languages));
  }

  ////////////////////////////////////////////////////////////////////////
  // Preimages
  ////////////////////////////////////////////////////////////////////////

  bool check_preimage_closure(LocalVariety const& v,
                              FreeMorphism const& f,
                              LocalVariety const& w,
                              PreimageRoute       route) {
    if (v.csig() != w.csig()) {
      throw InputError("local varieties of different signatures");
    }
    if (f.domain() != v.alphabet() || f.codomain() != w.alphabet()) {
      throw InputError("morphism alphabets do not match the varieties");
    }
    DSignature const d = dual_of(v.csig());
    if (f.dsig() != d && !(is_word_based(f.dsig()) && is_word_based(d))) {
      throw InputError("morphism signature does not match the varieties");
    }
    if (route == PreimageRoute::automatic) {
      route = is_word_based(d) ? PreimageRoute::languages : PreimageRoute::monoids;
    }
    if (route == PreimageRoute::languages && is_word_based(f.dsig())) {
      for (auto const& l : w.languages()) {
        if (!v.contains(preimage(f, l))) {
          return false;
        }
      }
      return true;
    }
    auto gw     = variety_to_generated(w);
    auto images = std::vector<Elem>();
    for (auto const& t : f.images()) {
      images.push_back(
          gw.monoid.evaluate(FreeDElement::combination(d, t.words())));
    }
    if (route == PreimageRoute::monoids) {
      auto gv = variety_to_monoid(v);
      return factor_through(gv.monoid(), gv.gens(), gw.monoid.monoid(), images)
          .has_value();
    }
    // Read Σ-words in the monoid of w through f.
    auto const&        m = gw.monoid.monoid();
    std::size_t const  k = v.alphabet().size();
    std::vector<State> delta(m.size() * k);
    for (Elem x = 0; x < m.size(); ++x) {
      for (Letter a = 0; a < k; ++a) {
        delta[x * k + a] = m.mult(x, images[a]);
      }
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::vector<bool> acc(m.size());
      for (Elem x = 0; x < m.size(); ++x) {
        acc[x] = gw.keys[x][i];
      }
      auto pre = CanonicalDfa::from_dfa(v.alphabet(), m.size(), m.unit(), delta,
                                        std::move(acc));
      if (!v.contains(pre)) {
        return false;
      }
    }
    return true;
  }

}  // namespace regvar
