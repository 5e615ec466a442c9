//
// regvar - regular languages, finite D-monoids and their dualities
//

#include "regvar/profinite.hpp"

#include <algorithm>  // for sort, all_of, next_permutation
#include <numeric>    // for iota

namespace regvar {

  namespace {
    void check_family(std::vector<GeneratedDMonoid> const& gs) {
      if (gs.empty()) {
        throw InputError("limit of an empty family");
      }
      for (auto const& g : gs) {
        if (g.alphabet() != gs[0].alphabet() || g.dsig() != gs[0].dsig()) {
          throw InputError("family over different alphabets or signatures");
        }
      }
    }

    // All tuples of `arity` elements from {0, ..., n - 1}.
    std::vector<std::vector<Elem>> tuples(std::size_t n, std::size_t arity) {
      std::vector<std::vector<Elem>> out{{}};
      for (std::size_t i = 0; i < arity; ++i) {
        std::vector<std::vector<Elem>> next;
        for (auto const& t : out) {
          for (Elem x = 0; x < n; ++x) {
            next.push_back(t);
            next.back().push_back(x);
          }
        }
        out = std::move(next);
      }
      return out;
    }

    // g with its generators permuted.
    GeneratedDMonoid relabel(GeneratedDMonoid const&         g,
                             std::vector<std::size_t> const& perm) {
      std::vector<Elem> gens;
      for (auto i : perm) {
        gens.push_back(g.gen(i));
      }
      return GeneratedDMonoid(g.monoid(), g.alphabet(), std::move(gens));
    }

    // Quotients, generated submonoids and subdirect products of accepted
    // members must be accepted.
    std::vector<std::string>
    closure_failures(std::function<bool(GeneratedDMonoid const&)> const& test,
                     std::vector<GeneratedDMonoid> const&               sample) {
      // Products and quotients repeat a lot.
      std::map<GeneratedDMonoid, bool> seen;
      auto accept = [&](GeneratedDMonoid const& g) {
        auto it = seen.find(g);
        if (it == seen.end()) {
          it = seen.emplace(g, test(g)).first;
        }
        return it->second;
      };
      std::vector<std::string>      out;
      std::vector<GeneratedDMonoid> members;
      for (auto const& m : sample) {
        if (accept(m)) {
          members.push_back(m);
        }
      }
      for (auto const& m : members) {
        for (auto const& q : enumerate_quotients(m, m.size())) {
          if (!accept(q)) {
            out.push_back("quotient " + q.describe() + " of " + m.describe());
          }
        }
        for (auto const& t : tuples(m.size(), m.alphabet().size())) {
          auto s = generated_submonoid(m, t);
          if (!accept(s)) {
            out.push_back("submonoid " + s.describe() + " of " + m.describe());
          }
        }
      }
      std::size_t const        k = members.empty() ? 0 : members[0].alphabet().size();
      std::vector<std::size_t> perm(k);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        for (std::size_t i = 0; i < members.size(); ++i) {
          for (std::size_t j = i; j < members.size(); ++j) {
            auto p = subdirect(members[i], relabel(members[j], perm));
            if (!accept(p)) {
              out.push_back("product " + p.describe() + " of "
                            + members[i].describe() + " and "
                            + members[j].describe());
            }
          }
        }
      } while (k <= 3 && std::next_permutation(perm.begin(), perm.end()));
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }

    ApproximantMonoid const& entry(TruncatedTheory const& t, Alphabet const& a) {
      auto it = t.entries.find(a);
      if (it == t.entries.end()) {
        throw InputError("the theory has no entry for this alphabet");
      }
      return it->second;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Approximants
  ////////////////////////////////////////////////////////////////////////

  ApproximantMonoid limit_of(std::vector<GeneratedDMonoid> const& generators,
                             std::size_t                          limit) {
    check_family(generators);
    // One generate() over tuples instead of iterated binary joins.
    std::size_t const n = generators.size();
    Ambient           amb;
    amb.dsig     = generators[0].dsig();
    amb.alphabet = generators[0].alphabet();
    for (auto const& g : generators) {
      amb.unit.push_back(g.monoid().unit());
      amb.zero.push_back(amb.dsig == DSignature::slat || amb.dsig == DSignature::z2vec
                             ? g.monoid().carrier().zero()
                             : 0);
    }
    for (Letter a = 0; a < amb.alphabet.size(); ++a) {
      Key k;
      for (auto const& g : generators) {
        k.push_back(g.gen(a));
      }
      amb.gens.push_back(std::move(k));
    }
    amb.mult = [&](Key const& x, Key const& y) {
      Key z(n);
      for (std::size_t i = 0; i < n; ++i) {
        z[i] = generators[i].monoid().mult(x[i], y[i]);
      }
      return z;
    };
    amb.plus = [&](Key const& x, Key const& y) {
      Key z(n);
      for (std::size_t i = 0; i < n; ++i) {
        z[i] = generators[i].monoid().carrier().plus(x[i], y[i]);
      }
      return z;
    };
    amb.leq = [&](Key const& x, Key const& y) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!generators[i].monoid().carrier().leq(x[i], y[i])) {
          return false;
        }
      }
      return true;
    };

    ApproximantMonoid out;
    out.base = generate(amb, limit).monoid;
    for (auto const& g : generators) {
      auto c = canonicalize(g);
      auto p = leq_quo(c, out.base);
      if (!p || !p->is_surjective()) {
        throw InvariantError("limit projection is not a surjection");
      }
      out.provenance.push_back(std::move(c));
      out.projections.push_back(std::move(*p));
    }
    return out;
  }

  std::optional<DMonoidMorphism> mediating_map(GeneratedDMonoid const&  k,
                                               ApproximantMonoid const& m) {
    for (auto const& g : m.provenance) {
      if (!leq_quo(g, k)) {
        return std::nullopt;
      }
    }
    auto h = leq_quo(m.base, k);
    if (!h || !h->is_surjective()) {
      throw InvariantError("a cone of surjections did not factor through the "
                           "limit");
    }
    return h;
  }

  LocalPseudovariety recover_ideal(ApproximantMonoid const& m,
                                   std::size_t              size_bound) {
    auto quotients = enumerate_quotients(m.base, size_bound);
    auto ideal     = LocalPseudovariety::generated(
        m.base.alphabet(), m.base.dsig(), m.provenance);
    for (auto const& q : quotients) {
      if (!ideal.contains(q)) {
        throw InvariantError("quotient of the limit outside the generated ideal");
      }
    }
    auto result = LocalPseudovariety::finite(m.base.alphabet(), m.base.dsig(),
                                             std::move(quotients));
    for (auto const& g : m.provenance) {
      if (g.size() <= size_bound && !result.contains(g)) {
        throw InvariantError("generator missing from the recovered ideal");
      }
    }
    return result;
  }

  std::vector<std::pair<FreeDElement, FreeDElement>>
  kernel_pairs(GeneratedDMonoid const& g, std::size_t length_bound) {
    auto elems = free_elements_up_to(g.dsig(), g.alphabet().size(), length_bound);
    std::sort(elems.begin(), elems.end());
    std::vector<std::vector<FreeDElement>> classes(g.size());
    for (auto const& t : elems) {
      classes[g.evaluate(t)].push_back(t);
    }
    std::vector<std::pair<FreeDElement, FreeDElement>> out;
    for (auto const& c : classes) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t j = i + 1; j < c.size(); ++j) {
          out.emplace_back(c[i], c[j]);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Predicates
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::string> predicate_names() {
    return {"all", "commutative", "group", "idempotent", "x2=x3"};
  }

  PseudovarietyPredicate named_predicate(std::string const& name, DSignature dsig) {
    using M = FiniteDMonoid;
    std::function<bool(M const&)> member;
    if (name == "all") {
      member = [](M const&) { return true; };
    } else if (name == "idempotent") {
      member = [](M const& m) {
        for (Elem x = 0; x < m.size(); ++x) {
          if (m.mult(x, x) != x) {
            return false;
          }
        }
        return true;
      };
    } else if (name == "commutative") {
      member = [](M const& m) {
        for (Elem x = 0; x < m.size(); ++x) {
          for (Elem y = 0; y < x; ++y) {
            if (m.mult(x, y) != m.mult(y, x)) {
              return false;
            }
          }
        }
        return true;
      };
    } else if (name == "x2=x3") {
      member = [](M const& m) {
        for (Elem x = 0; x < m.size(); ++x) {
          auto xx = m.mult(x, x);
          if (xx != m.mult(xx, x)) {
            return false;
          }
        }
        return true;
      };
    } else if (name == "group") {
      member = [](M const& m) {
        for (Elem x = 0; x < m.size(); ++x) {
          bool invertible = false;
          for (Elem y = 0; y < m.size() && !invertible; ++y) {
            invertible = m.mult(x, y) == m.unit();
          }
          if (!invertible) {
            return false;
          }
        }
        return true;
      };
    } else {
      throw InputError("unknown predicate: " + name);
    }
    return {dsig, std::move(member), name};
  }

  std::vector<std::string>
  spot_check(PseudovarietyPredicate const&        p,
             std::vector<GeneratedDMonoid> const& sample) {
    return closure_failures(
        [&p](GeneratedDMonoid const& g) { return p(g.monoid()); }, sample);
  }

  GeneratedDMonoid generated_submonoid(GeneratedDMonoid const&  g,
                                       std::vector<Elem> const& gens) {
    if (gens.size() != g.alphabet().size()) {
      throw InputError("one generator per letter is required");
    }
    auto amb = ambient_of(g);
    amb.gens.clear();
    for (Elem x : gens) {
      if (x >= g.size()) {
        throw InputError("generator out of range");
      }
      amb.gens.push_back({x});
    }
    return generate(amb, g.size()).monoid;
  }

  ////////////////////////////////////////////////////////////////////////
  // Truncated theories
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::vector<GeneratedDMonoid> satisfying(PseudovarietyPredicate const& p,
                                             Alphabet const&               alphabet,
                                             std::size_t size_bound) {
      std::vector<GeneratedDMonoid> out;
      for (auto& g : enumerate_generated(alphabet, p.dsig, size_bound)) {
        if (p(g.monoid())) {
          out.push_back(std::move(g));
        }
      }
      if (out.empty()) {
        throw InputError("the predicate rejects every monoid, even the "
                         "trivial one");
      }
      return out;
    }
  }  // namespace

  ApproximantMonoid theory_from_pseudovariety(PseudovarietyPredicate const& p,
                                              Alphabet const&               alphabet,
                                              std::size_t size_bound) {
    return limit_of(satisfying(p, alphabet, size_bound));
  }

  TruncatedTheory truncated_theory(PseudovarietyPredicate const& p,
                                   std::vector<Alphabet> const&  alphabets,
                                   std::size_t                   size_bound) {
    TruncatedTheory t;
    t.dsig       = p.dsig;
    t.size_bound = size_bound;
    for (auto const& a : alphabets) {
      auto sample = enumerate_generated(a, p.dsig, size_bound);
      for (auto const& w : spot_check(p, sample)) {
        t.warnings.push_back(p.description + ": " + w);
      }
      t.entries.emplace(a, limit_of(satisfying(p, a, size_bound)));
    }
    return t;
  }

  Verdict pseudovariety_from_theory(TruncatedTheory const& t,
                                    GeneratedDMonoid const& m) {
    if (m.dsig() != t.dsig) {
      throw InputError("monoid and theory have different signatures");
    }
    auto const& e = entry(t, m.alphabet());
    if (leq_quo(m, e.base)) {
      return {};
    }
    return {false, m.describe() + " is not a quotient of the approximant of size "
                       + std::to_string(e.base.size()) + " (size bound "
                       + std::to_string(t.size_bound) + ")"};
  }

  Verdict pseudovariety_from_theory(TruncatedTheory const& t,
                                    FiniteDMonoid const&   m) {
    for (auto const& [a, e] : t.entries) {
      if (a.size() == m.size()) {
        std::vector<Elem> gens(m.size());
        std::iota(gens.begin(), gens.end(), 0);
        return pseudovariety_from_theory(t, GeneratedDMonoid(m, a, std::move(gens)));
      }
    }
    throw InputError("the theory has no entry for an alphabet of size "
                     + std::to_string(m.size()));
  }

  Verdict theory_naturality_check(TruncatedTheory const& t, FreeMorphism const& f) {
    auto const& src = entry(t, f.domain());
    auto const& dst = entry(t, f.codomain());
    std::vector<Elem> images;
    for (Letter a = 0; a < f.domain().size(); ++a) {
      auto x = f.image(a);
      if (x.dsig() != t.dsig) {
        if (!is_word_based(x.dsig()) || !is_word_based(t.dsig)) {
          throw InputError("morphism signature does not match the theory");
        }
        x = FreeDElement::word(t.dsig, x.as_word());
      }
      images.push_back(dst.base.evaluate(x));
    }
    if (factor_through(src.base.monoid(), src.base.gens(), dst.base.monoid(), images)) {
      return {};
    }
    return {false, "no morphism between the approximants commutes with "
                       + f.to_string()};
  }

  std::vector<std::string> theory_closure_check(
      TruncatedTheory const&               t,
      std::vector<GeneratedDMonoid> const& sample) {
    return closure_failures(
        [&t](GeneratedDMonoid const& g) {
          return pseudovariety_from_theory(t, g).holds;
        },
        sample);
  }

}  // namespace regvar
