//
// regvar - regular languages, finite D-monoids and their dualities
//

#include "regvar/dalg.hpp"

#include <algorithm>  // for sort, unique, max
#include <bit>        // for has_single_bit, countr_zero
#include <map>        // for map
#include <set>        // for set

namespace regvar {

  namespace {
    constexpr Elem kNone = UINT32_MAX;

    std::string pos(std::initializer_list<Elem> xs) {
      std::string out = "(";
      bool        first = true;
      for (Elem x : xs) {
        if (!first) {
          out += ", ";
        }
        first = false;
        out += std::to_string(x);
      }
      return out + ")";
    }

    void check_table(std::vector<Elem> const& t, std::size_t n,
                     std::string const& what) {
      if (t.size() != n * n) {
        throw InputError(what + " table must have " + std::to_string(n * n)
                         + " entries");
      }
      for (Elem x : t) {
        if (x >= n) {
          throw InputError(what + " table entry out of range");
        }
      }
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // FiniteDObject
  ////////////////////////////////////////////////////////////////////////

  // Empty sets and posets are allowed: they are the duals of the trivial
  // boolean algebra and lattice.
  FiniteDObject FiniteDObject::set(std::size_t n) {
    FiniteDObject x;
    x._dsig = DSignature::set;
    x._size = n;
    return x;
  }

  FiniteDObject FiniteDObject::poset(std::size_t               n,
                                     std::vector<std::uint8_t> leq) {
    if (leq.size() != n * n) {
      throw InputError("order table must be n * n");
    }
    for (auto& b : leq) {
      b = b != 0;
    }
    FiniteDObject x;
    x._dsig = DSignature::pos;
    x._size = n;
    x._leq  = std::move(leq);
    if (auto v = x.violations(); !v.empty()) {
      throw InputError("not a partial order: " + v.front());
    }
    return x;
  }

  FiniteDObject FiniteDObject::semilattice(std::size_t       n,
                                           std::vector<Elem> join,
                                           Elem              bottom) {
    check_table(join, n, "join");
    if (bottom >= n) {
      throw InputError("bottom out of range");
    }
    FiniteDObject x;
    x._dsig = DSignature::slat;
    x._size = n;
    x._op   = std::move(join);
    x._zero = bottom;
    if (auto v = x.violations(); !v.empty()) {
      throw InputError("not a semilattice: " + v.front());
    }
    return x;
  }

  FiniteDObject FiniteDObject::space(std::size_t dim) {
    if (dim > 16) {
      throw ResourceError("Z2-space dimension above 16");
    }
    std::size_t const n = std::size_t(1) << dim;
    std::vector<Elem> add(n * n);
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        add[x * n + y] = x ^ y;
      }
    }
    return space(n, std::move(add), 0);
  }

  FiniteDObject FiniteDObject::space(std::size_t       n,
                                     std::vector<Elem> add,
                                     Elem              zero) {
    check_table(add, n, "addition");
    if (zero >= n) {
      throw InputError("zero out of range");
    }
    FiniteDObject x;
    x._dsig = DSignature::z2vec;
    x._size = n;
    x._op   = std::move(add);
    x._zero = zero;
    if (auto v = x.violations(); !v.empty()) {
      throw InputError("not a Z2-space: " + v.front());
    }
    return x;
  }

  bool FiniteDObject::leq(Elem x, Elem y) const {
    switch (_dsig) {
      case DSignature::pos:
        return _leq[x * _size + y];
      case DSignature::slat:
        return plus(x, y) == y;
      default:
        return x == y;
    }
  }

  std::size_t FiniteDObject::dim() const {
    if (_dsig != DSignature::z2vec) {
      throw InputError("dimension is defined for Z2-spaces only");
    }
    return static_cast<std::size_t>(std::countr_zero(_size));
  }

  std::vector<std::string> FiniteDObject::violations() const {
    std::vector<std::string> out;
    std::size_t const        n = _size;
    if (_dsig == DSignature::pos) {
      for (Elem x = 0; x < n; ++x) {
        if (!_leq[x * n + x]) {
          out.push_back("order is not reflexive at " + pos({x}));
          break;
        }
      }
      for (Elem x = 0; x < n && out.size() < 2; ++x) {
        for (Elem y = 0; y < n; ++y) {
          if (x != y && _leq[x * n + y] && _leq[y * n + x]) {
            out.push_back("order is not antisymmetric at " + pos({x, y}));
            break;
          }
        }
      }
      bool done = false;
      for (Elem x = 0; x < n && !done; ++x) {
        for (Elem y = 0; y < n && !done; ++y) {
          for (Elem z = 0; z < n && !done; ++z) {
            if (_leq[x * n + y] && _leq[y * n + z] && !_leq[x * n + z]) {
              out.push_back("order is not transitive at " + pos({x, y, z}));
              done = true;
            }
          }
        }
      }
    } else if (_dsig == DSignature::slat || _dsig == DSignature::z2vec) {
      std::string const op = _dsig == DSignature::slat ? "join" : "addition";
      bool              assoc = true, comm = true, unit = true, law = true;
      for (Elem x = 0; x < n; ++x) {
        if (plus(_zero, x) != x) {
          unit = false;
        }
        if (_dsig == DSignature::slat ? plus(x, x) != x : plus(x, x) != _zero) {
          law = false;
        }
        for (Elem y = 0; y < n; ++y) {
          if (plus(x, y) != plus(y, x)) {
            comm = false;
          }
          for (Elem z = 0; z < n && assoc; ++z) {
            if (plus(plus(x, y), z) != plus(x, plus(y, z))) {
              assoc = false;
            }
          }
        }
      }
      if (!assoc) {
        out.push_back(op + " is not associative");
      }
      if (!comm) {
        out.push_back(op + " is not commutative");
      }
      if (!unit) {
        out.push_back(std::string(_dsig == DSignature::slat ? "bottom"
                                                            : "zero")
                      + " is not a unit for " + op);
      }
      if (!law) {
        out.push_back(_dsig == DSignature::slat ? "join is not idempotent"
                                                : "x + x = 0 fails");
      }
      if (_dsig == DSignature::z2vec && !std::has_single_bit(n)) {
        out.push_back("size is not a power of two");
      }
    }
    return out;
  }

  bool is_d_map(FiniteDObject const&     source,
                FiniteDObject const&     target,
                std::vector<Elem> const& table) {
    if (source.dsig() != target.dsig() || table.size() != source.size()) {
      return false;
    }
    for (Elem y : table) {
      if (y >= target.size()) {
        return false;
      }
    }
    std::size_t const n = source.size();
    switch (source.dsig()) {
      case DSignature::set:
        return true;
      case DSignature::pos:
        for (Elem x = 0; x < n; ++x) {
          for (Elem y = 0; y < n; ++y) {
            if (source.leq(x, y) && !target.leq(table[x], table[y])) {
              return false;
            }
          }
        }
        return true;
      default:
        if (table[source.zero()] != target.zero()) {
          return false;
        }
        for (Elem x = 0; x < n; ++x) {
          for (Elem y = 0; y < n; ++y) {
            if (table[source.plus(x, y)]
                != target.plus(table[x], table[y])) {
              return false;
            }
          }
        }
        return true;
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // FiniteDMonoid
  ////////////////////////////////////////////////////////////////////////

  FiniteDMonoid::FiniteDMonoid(FiniteDObject     carrier,
                               Elem              unit,
                               std::vector<Elem> mult)
      : _carrier(std::move(carrier)), _unit(unit), _mult(std::move(mult)) {
    check_table(_mult, _carrier.size(), "multiplication");
    if (_unit >= _carrier.size()) {
      throw InputError("unit out of range");
    }
  }

  FiniteDMonoid FiniteDMonoid::z2_algebra(std::size_t              dim,
                                          Elem                     unit,
                                          std::vector<Elem> const& constants) {
    auto              space = FiniteDObject::space(dim);
    std::size_t const n     = space.size();
    if (constants.size() != dim * dim) {
      throw InputError("structure constants must be dim * dim");
    }
    std::vector<Elem> mult(n * n, 0);
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        Elem z = 0;
        for (std::size_t i = 0; i < dim; ++i) {
          for (std::size_t j = 0; j < dim; ++j) {
            if ((x >> i & 1) && (y >> j & 1)) {
              z ^= constants[i * dim + j];
            }
          }
        }
        if (z >= n) {
          throw InputError("structure constant out of range");
        }
        mult[x * n + y] = z;
      }
    }
    return FiniteDMonoid(std::move(space), unit, std::move(mult));
  }

  ValidityReport validate(FiniteDMonoid const& m) {
    ValidityReport    r{m.carrier().violations()};
    std::size_t const n = m.size();
    auto const&       c = m.carrier();
    [&] {
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
          for (Elem z = 0; z < n; ++z) {
            if (m.mult(m.mult(x, y), z) != m.mult(x, m.mult(y, z))) {
              r.violations.push_back("associativity fails at "
                                     + pos({x, y, z}));
              return;
            }
          }
        }
      }
    }();
    for (Elem x = 0; x < n; ++x) {
      if (m.mult(m.unit(), x) != x || m.mult(x, m.unit()) != x) {
        r.violations.push_back("unit law fails at " + pos({x}));
        break;
      }
    }
    switch (m.dsig()) {
      case DSignature::set:
        break;
      case DSignature::pos:
        [&] {
          for (Elem z = 0; z < n; ++z) {
            for (Elem x = 0; x < n; ++x) {
              for (Elem y = 0; y < n; ++y) {
                if (!c.leq(x, y)) {
                  continue;
                }
                if (!c.leq(m.mult(z, x), m.mult(z, y))) {
                  r.violations.push_back(
                      "bimorphism: left multiplication by "
                      + std::to_string(z) + " is not monotone at "
                      + pos({x, y}));
                  return;
                }
                if (!c.leq(m.mult(x, z), m.mult(y, z))) {
                  r.violations.push_back(
                      "bimorphism: right multiplication by "
                      + std::to_string(z) + " is not monotone at "
                      + pos({x, y}));
                  return;
                }
              }
            }
          }
        }();
        break;
      default: {
        std::string const op = m.dsig() == DSignature::slat ? "join" : "sum";
        [&] {
          for (Elem z = 0; z < n; ++z) {
            if (m.mult(z, c.zero()) != c.zero()
                || m.mult(c.zero(), z) != c.zero()) {
              r.violations.push_back("bimorphism: multiplication by "
                                     + std::to_string(z)
                                     + " does not preserve "
                                     + (m.dsig() == DSignature::slat
                                            ? "bottom"
                                            : "zero"));
              return;
            }
            for (Elem x = 0; x < n; ++x) {
              for (Elem y = 0; y < n; ++y) {
                if (m.mult(z, c.plus(x, y))
                    != c.plus(m.mult(z, x), m.mult(z, y))) {
                  r.violations.push_back("bimorphism: left multiplication by "
                                         + std::to_string(z)
                                         + " does not preserve the " + op
                                         + " at " + pos({x, y}));
                  return;
                }
                if (m.mult(c.plus(x, y), z)
                    != c.plus(m.mult(x, z), m.mult(y, z))) {
                  r.violations.push_back(
                      "bimorphism: right multiplication by "
                      + std::to_string(z) + " does not preserve the " + op
                      + " at " + pos({x, y}));
                  return;
                }
              }
            }
          }
        }();
      }
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // DMonoidMorphism
  ////////////////////////////////////////////////////////////////////////

  bool DMonoidMorphism::is_surjective() const {
    std::vector<bool> hit(target.size(), false);
    for (Elem y : table) {
      hit[y] = true;
    }
    return std::find(hit.begin(), hit.end(), false) == hit.end();
  }

  ValidityReport validate(DMonoidMorphism const& f) {
    ValidityReport r;
    if (f.table.size() != f.source.size()) {
      r.violations.push_back("table size differs from source size");
      return r;
    }
    if (!is_d_map(f.source.carrier(), f.target.carrier(), f.table)) {
      r.violations.push_back("does not preserve the D-structure");
      return r;
    }
    if (f(f.source.unit()) != f.target.unit()) {
      r.violations.push_back("does not preserve the unit");
    }
    for (Elem x = 0; x < f.source.size(); ++x) {
      for (Elem y = 0; y < f.source.size(); ++y) {
        if (f(f.source.mult(x, y)) != f.target.mult(f(x), f(y))) {
          r.violations.push_back("does not preserve multiplication at "
                                 + pos({x, y}));
          return r;
        }
      }
    }
    return r;
  }

  DMonoidMorphism compose(DMonoidMorphism const& f, DMonoidMorphism const& g) {
    if (f.target != g.source) {
      throw InputError("morphisms are not composable");
    }
    std::vector<Elem> table;
    for (Elem y : f.table) {
      table.push_back(g(y));
    }
    return {f.source, g.target, std::move(table)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Generation
  ////////////////////////////////////////////////////////////////////////

  struct GeneratedBuilder {
    static GeneratedDMonoid make(FiniteDMonoid             m,
                                 Alphabet                  alphabet,
                                 std::vector<Elem>         gens,
                                 std::vector<FreeDElement> labels) {
      GeneratedDMonoid g;
      g._monoid   = std::move(m);
      g._alphabet = std::move(alphabet);
      g._gens     = std::move(gens);
      g._labels   = std::move(labels);
      return g;
    }
  };

  namespace {
    // A growable bitset compared as a binary number (highest bit first).
    struct Mask {
      std::vector<std::uint64_t> bits;

      void set(std::size_t i) {
        if (bits.size() <= i / 64) {
          bits.resize(i / 64 + 1, 0);
        }
        bits[i / 64] |= std::uint64_t(1) << (i % 64);
      }
      bool test(std::size_t i) const {
        return i / 64 < bits.size() && (bits[i / 64] >> (i % 64) & 1);
      }
    };
  }  // namespace

  Generated generate(Ambient const& amb, std::size_t limit) {
    std::size_t const k = amb.alphabet.size();
    if (amb.gens.size() != k) {
      throw InputError("one generator per letter is required");
    }
    bool const additive
        = amb.dsig == DSignature::slat || amb.dsig == DSignature::z2vec;

    // Word values in shortlex order of their least words.
    std::map<Key, Elem> word_index;
    std::vector<Key>    wkeys{amb.unit};
    std::vector<Word>   words{Word{}};
    word_index.emplace(amb.unit, 0);
    for (std::size_t i = 0; i < wkeys.size(); ++i) {
      for (Letter a = 0; a < k; ++a) {
        Key next = amb.mult(wkeys[i], amb.gens[a]);
        if (word_index.emplace(next, static_cast<Elem>(wkeys.size())).second) {
          if (wkeys.size() >= limit) {
            throw ResourceError("generated monoid exceeds "
                                + std::to_string(limit) + " elements");
          }
          Word w = words[i];
          w.push_back(a);
          wkeys.push_back(std::move(next));
          words.push_back(std::move(w));
        }
      }
    }

    std::map<Key, Elem> index;
    std::vector<Key>    keys;
    std::vector<Mask>   masks;
    if (!additive) {
      index = std::move(word_index);
      keys  = wkeys;
    } else {
      // Sums of word values; each element keeps the numerically least set of
      // word indices summing to it, which is its least label.
      index.emplace(amb.zero, 0);
      keys.push_back(amb.zero);
      masks.emplace_back();
      for (std::size_t j = 0; j < wkeys.size(); ++j) {
        std::size_t const cur = keys.size();
        for (std::size_t x = 0; x < cur; ++x) {
          Key y = amb.plus(keys[x], wkeys[j]);
          if (index.emplace(y, static_cast<Elem>(keys.size())).second) {
            if (keys.size() >= limit) {
              throw ResourceError("generated monoid exceeds "
                                  + std::to_string(limit) + " elements");
            }
            keys.push_back(std::move(y));
            Mask m = masks[x];
            m.set(j);
            masks.push_back(std::move(m));
          }
        }
      }
    }

    std::size_t const n      = keys.size();
    auto              lookup = [&](Key const& key) {
      auto it = index.find(key);
      if (it == index.end()) {
        throw InvariantError("ambient operation leaves the generated set");
      }
      return it->second;
    };

    std::vector<Elem> mult(n * n);
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        mult[x * n + y] = lookup(amb.mult(keys[x], keys[y]));
      }
    }
    FiniteDObject carrier;
    switch (amb.dsig) {
      case DSignature::set:
        carrier = FiniteDObject::set(n);
        break;
      case DSignature::pos: {
        std::vector<std::uint8_t> leq(n * n);
        for (Elem x = 0; x < n; ++x) {
          for (Elem y = 0; y < n; ++y) {
            leq[x * n + y] = amb.leq(keys[x], keys[y]);
          }
        }
        carrier = FiniteDObject::poset(n, std::move(leq));
        break;
      }
      default: {
        std::vector<Elem> op(n * n);
        for (Elem x = 0; x < n; ++x) {
          for (Elem y = 0; y < n; ++y) {
            op[x * n + y] = lookup(amb.plus(keys[x], keys[y]));
          }
        }
        carrier = amb.dsig == DSignature::slat
                      ? FiniteDObject::semilattice(n, std::move(op), 0)
                      : FiniteDObject::space(n, std::move(op), 0);
      }
    }

    std::vector<Elem> gens;
    for (auto const& g : amb.gens) {
      gens.push_back(lookup(g));
    }
    std::vector<FreeDElement> labels;
    labels.reserve(n);
    for (Elem x = 0; x < n; ++x) {
      if (!additive) {
        labels.push_back(FreeDElement::word(amb.dsig, words[x]));
      } else {
        std::vector<Word> ws;
        for (std::size_t j = 0; j < words.size(); ++j) {
          if (masks[x].test(j)) {
            ws.push_back(words[j]);
          }
        }
        labels.push_back(FreeDElement::combination(amb.dsig, std::move(ws)));
      }
    }
    Elem unit = lookup(amb.unit);
    return {GeneratedBuilder::make(
                FiniteDMonoid(std::move(carrier), unit, std::move(mult)),
                amb.alphabet,
                std::move(gens),
                std::move(labels)),
            std::move(keys)};
  }

  Ambient ambient_of(GeneratedDMonoid const& g) {
    FiniteDMonoid const& m = g.monoid();
    Ambient              amb;
    amb.dsig     = g.dsig();
    amb.alphabet = g.alphabet();
    amb.unit     = {m.unit()};
    for (Elem x : g.gens()) {
      amb.gens.push_back({x});
    }
    amb.mult = [&m](Key const& x, Key const& y) -> Key {
      return {m.mult(x[0], y[0])};
    };
    amb.plus = [&m](Key const& x, Key const& y) -> Key {
      return {m.carrier().plus(x[0], y[0])};
    };
    amb.zero = {m.carrier().zero()};
    amb.leq  = [&m](Key const& x, Key const& y) {
      return m.carrier().leq(x[0], y[0]);
    };
    return amb;
  }

  ////////////////////////////////////////////////////////////////////////
  // GeneratedDMonoid
  ////////////////////////////////////////////////////////////////////////

  GeneratedDMonoid::GeneratedDMonoid(FiniteDMonoid     monoid,
                                     Alphabet          alphabet,
                                     std::vector<Elem> gens) {
    if (gens.size() != alphabet.size()) {
      throw InputError("one generator per letter is required");
    }
    for (Elem x : gens) {
      if (x >= monoid.size()) {
        throw InputError("generator out of range");
      }
    }
    GeneratedDMonoid raw
        = GeneratedBuilder::make(std::move(monoid), std::move(alphabet),
                                 std::move(gens), {});
    auto result = generate(ambient_of(raw), raw.size());
    if (result.monoid.size() != raw.size()) {
      throw InputError("the generators do not generate the monoid ("
                       + std::to_string(result.monoid.size()) + " of "
                       + std::to_string(raw.size()) + " elements reached)");
    }
    *this = std::move(result.monoid);
  }

  Elem GeneratedDMonoid::evaluate(Word const& w) const {
    Elem x = _monoid.unit();
    for (Letter a : w) {
      if (a >= _gens.size()) {
        throw InputError("letter outside the monoid's alphabet");
      }
      x = _monoid.mult(x, _gens[a]);
    }
    return x;
  }

  Elem GeneratedDMonoid::evaluate(FreeDElement const& t) const {
    if (t.dsig() != dsig()) {
      throw InputError("free element signature differs from the monoid's");
    }
    if (is_word_based(dsig())) {
      return evaluate(t.as_word());
    }
    Elem x = _monoid.carrier().zero();
    for (auto const& w : t.words()) {
      x = _monoid.carrier().plus(x, evaluate(w));
    }
    return x;
  }

  std::string GeneratedDMonoid::describe() const {
    std::string out = std::string(to_string(dsig())) + " monoid of size "
                      + std::to_string(size()) + " [";
    for (std::size_t x = 0; x < _labels.size(); ++x) {
      if (x > 0) {
        out += ", ";
      }
      out += _labels[x].to_string(_alphabet);
    }
    return out + "]";
  }

  ////////////////////////////////////////////////////////////////////////
  // Operations
  ////////////////////////////////////////////////////////////////////////

  GeneratedDMonoid canonicalize(GeneratedDMonoid const& g) {
    return generate(ambient_of(g), g.size() + 1).monoid;
  }

  GeneratedDMonoid trivial_monoid(Alphabet const& alphabet, DSignature dsig) {
    FiniteDObject carrier;
    switch (dsig) {
      case DSignature::set:
        carrier = FiniteDObject::set(1);
        break;
      case DSignature::pos:
        carrier = FiniteDObject::poset(1, {1});
        break;
      case DSignature::slat:
        carrier = FiniteDObject::semilattice(1, {0}, 0);
        break;
      case DSignature::z2vec:
        carrier = FiniteDObject::space(0);
        break;
    }
    return GeneratedDMonoid(FiniteDMonoid(std::move(carrier), 0, {0}),
                            alphabet,
                            std::vector<Elem>(alphabet.size(), 0));
  }

  GeneratedDMonoid transition_monoid(CanonicalDfa const& l) {
    Ambient amb;
    amb.dsig     = DSignature::set;
    amb.alphabet = l.alphabet();
    for (CanonicalDfa::State q = 0; q < l.size(); ++q) {
      amb.unit.push_back(q);
    }
    for (Letter a = 0; a < l.alphabet().size(); ++a) {
      Key t;
      for (CanonicalDfa::State q = 0; q < l.size(); ++q) {
        t.push_back(l.next(q, a));
      }
      amb.gens.push_back(std::move(t));
    }
    // First x, then y.
    amb.mult = [](Key const& x, Key const& y) {
      Key z(x.size());
      for (std::size_t q = 0; q < x.size(); ++q) {
        z[q] = y[x[q]];
      }
      return z;
    };
    return generate(amb).monoid;
  }

  namespace {
    void check_compatible(GeneratedDMonoid const& g1,
                          GeneratedDMonoid const& g2) {
      if (g1.alphabet() != g2.alphabet()) {
        throw InputError("generated monoids over different alphabets");
      }
      if (g1.dsig() != g2.dsig()) {
        throw InputError("generated monoids of different signatures");
      }
    }
  }  // namespace

  GeneratedDMonoid subdirect(GeneratedDMonoid const& g1,
                             GeneratedDMonoid const& g2) {
    check_compatible(g1, g2);
    auto const& m1 = g1.monoid();
    auto const& m2 = g2.monoid();
    Ambient     amb;
    amb.dsig     = g1.dsig();
    amb.alphabet = g1.alphabet();
    amb.unit     = {m1.unit(), m2.unit()};
    for (Letter a = 0; a < g1.alphabet().size(); ++a) {
      amb.gens.push_back({g1.gen(a), g2.gen(a)});
    }
    amb.mult = [&](Key const& x, Key const& y) -> Key {
      return {m1.mult(x[0], y[0]), m2.mult(x[1], y[1])};
    };
    amb.plus = [&](Key const& x, Key const& y) -> Key {
      return {m1.carrier().plus(x[0], y[0]), m2.carrier().plus(x[1], y[1])};
    };
    amb.zero = {m1.carrier().zero(), m2.carrier().zero()};
    amb.leq  = [&](Key const& x, Key const& y) {
      return m1.carrier().leq(x[0], y[0]) && m2.carrier().leq(x[1], y[1]);
    };
    return generate(amb, g1.size() * g2.size() + 1).monoid;
  }

  GeneratedDMonoid subdirect(std::vector<GeneratedDMonoid> const& gs) {
    if (gs.empty()) {
      throw InputError("subdirect product of an empty family needs an "
                       "alphabet; use trivial_monoid");
    }
    GeneratedDMonoid out = canonicalize(gs[0]);
    for (std::size_t i = 1; i < gs.size(); ++i) {
      out = subdirect(out, gs[i]);
    }
    return out;
  }

  std::optional<DMonoidMorphism>
  factor_through(FiniteDMonoid const&     source,
                 std::vector<Elem> const& source_gens,
                 FiniteDMonoid const&     target,
                 std::vector<Elem> const& target_images) {
    if (source.dsig() != target.dsig()) {
      throw InputError("monoids of different signatures");
    }
    if (source_gens.size() != target_images.size()) {
      throw InputError("generator lists differ in length");
    }
    bool const additive = source.dsig() == DSignature::slat
                          || source.dsig() == DSignature::z2vec;
    std::vector<Elem>                  f(source.size(), kNone);
    std::vector<std::pair<Elem, Elem>> work, done;
    auto                               visit = [&](Elem x, Elem y) {
      if (f[x] == kNone) {
        f[x] = y;
        work.emplace_back(x, y);
        return true;
      }
      return f[x] == y;
    };
    if (!visit(source.unit(), target.unit())) {
      return std::nullopt;
    }
    for (std::size_t a = 0; a < source_gens.size(); ++a) {
      if (!visit(source_gens[a], target_images[a])) {
        return std::nullopt;
      }
    }
    if (additive
        && !visit(source.carrier().zero(), target.carrier().zero())) {
      return std::nullopt;
    }
    // The relation is closed under right multiplication by generator pairs
    // and, for SLAT/Z2VEC, under sums; a clash means it is not a function.
    while (!work.empty()) {
      auto [x, y] = work.back();
      work.pop_back();
      for (std::size_t a = 0; a < source_gens.size(); ++a) {
        if (!visit(source.mult(x, source_gens[a]),
                   target.mult(y, target_images[a]))) {
          return std::nullopt;
        }
      }
      done.emplace_back(x, y);
      if (additive) {
        for (auto [u, v] : done) {
          if (!visit(source.carrier().plus(x, u),
                     target.carrier().plus(y, v))) {
            return std::nullopt;
          }
        }
      }
    }
    if (std::find(f.begin(), f.end(), kNone) != f.end()) {
      throw InputError("the source generators do not generate the source");
    }
    if (source.dsig() == DSignature::pos
        && !is_d_map(source.carrier(), target.carrier(), f)) {
      return std::nullopt;
    }
    return DMonoidMorphism{source, target, std::move(f)};
  }

  std::optional<DMonoidMorphism> leq_quo(GeneratedDMonoid const& g1,
                                         GeneratedDMonoid const& g2) {
    check_compatible(g1, g2);
    return factor_through(g2.monoid(), g2.gens(), g1.monoid(), g1.gens());
  }

  ////////////////////////////////////////////////////////////////////////
  // Congruences
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // A relation on {0, ..., n - 1} as a row-major bit matrix.
    class Relation {
     public:
      explicit Relation(std::size_t n)
          : _n(n), _w((n + 63) / 64), _bits(n * _w, 0) {}

      bool test(Elem x, Elem y) const {
        return _bits[x * _w + y / 64] >> (y % 64) & 1;
      }
      bool set(Elem x, Elem y) {
        auto& word = _bits[x * _w + y / 64];
        auto  bit  = std::uint64_t(1) << (y % 64);
        if (word & bit) {
          return false;
        }
        word |= bit;
        return true;
      }
      std::size_t size() const noexcept {
        return _n;
      }
      auto operator<=>(Relation const&) const = default;

     private:
      std::size_t                _n;
      std::size_t                _w;
      std::vector<std::uint64_t> _bits;
    };

    // Closes r under the congruence rules of g, starting from the pairs in
    // `work` (which must already be set in r).
    void close(GeneratedDMonoid const&             g,
               Relation&                           r,
               std::vector<std::pair<Elem, Elem>>  work) {
      auto const&       m         = g.monoid();
      auto const&       c         = m.carrier();
      std::size_t const n         = m.size();
      bool const        symmetric = g.dsig() != DSignature::pos;
      bool const        additive  = g.dsig() == DSignature::slat
                            || g.dsig() == DSignature::z2vec;
      auto add = [&](Elem x, Elem y) {
        if (r.set(x, y)) {
          work.emplace_back(x, y);
        }
      };
      while (!work.empty()) {
        auto [x, y] = work.back();
        work.pop_back();
        if (symmetric) {
          add(y, x);
        }
        for (Elem s : g.gens()) {
          add(m.mult(s, x), m.mult(s, y));
          add(m.mult(x, s), m.mult(y, s));
        }
        if (additive) {
          for (Elem z = 0; z < n; ++z) {
            add(c.plus(x, z), c.plus(y, z));
          }
        }
        for (Elem w = 0; w < n; ++w) {
          if (r.test(w, x)) {
            add(w, y);
          }
          if (r.test(y, w)) {
            add(x, w);
          }
        }
      }
    }

    Relation base_relation(GeneratedDMonoid const& g) {
      Relation r(g.size());
      for (Elem x = 0; x < g.size(); ++x) {
        for (Elem y = 0; y < g.size(); ++y) {
          if (x == y || (g.dsig() == DSignature::pos
                         && g.monoid().carrier().leq(x, y))) {
            r.set(x, y);
          }
        }
      }
      return r;
    }

    // Representative (least element) of the class of each element.
    std::vector<Elem> class_reps(Relation const& r) {
      std::vector<Elem> rep(r.size());
      for (Elem x = 0; x < r.size(); ++x) {
        for (Elem y = 0; y <= x; ++y) {
          if (r.test(x, y) && r.test(y, x)) {
            rep[x] = y;
            break;
          }
        }
      }
      return rep;
    }

    std::size_t class_count(Relation const& r) {
      auto        rep = class_reps(r);
      std::size_t n   = 0;
      for (Elem x = 0; x < rep.size(); ++x) {
        n += rep[x] == x;
      }
      return n;
    }

    std::pair<GeneratedDMonoid, DMonoidMorphism>
    quotient_by(GeneratedDMonoid const& g, Relation const& r) {
      auto const& m   = g.monoid();
      auto const  rep = class_reps(r);
      Ambient     amb;
      amb.dsig     = g.dsig();
      amb.alphabet = g.alphabet();
      amb.unit     = {rep[m.unit()]};
      for (Elem s : g.gens()) {
        amb.gens.push_back({rep[s]});
      }
      amb.mult = [&](Key const& x, Key const& y) -> Key {
        return {rep[m.mult(x[0], y[0])]};
      };
      amb.plus = [&](Key const& x, Key const& y) -> Key {
        return {rep[m.carrier().plus(x[0], y[0])]};
      };
      amb.zero = {rep[m.carrier().zero()]};
      amb.leq  = [&](Key const& x, Key const& y) { return r.test(x[0], y[0]); };
      auto q   = generate(amb, g.size() + 1);
      std::map<Elem, Elem> where;
      for (Elem i = 0; i < q.keys.size(); ++i) {
        where[q.keys[i][0]] = i;
      }
      std::vector<Elem> table;
      for (Elem x = 0; x < g.size(); ++x) {
        table.push_back(where.at(rep[x]));
      }
      DMonoidMorphism proj{m, q.monoid.monoid(), std::move(table)};
      return {std::move(q.monoid), std::move(proj)};
    }

    // Every congruence (admissible preorder for POS) of g.
    std::vector<Relation> congruences(GeneratedDMonoid const& g,
                                      std::size_t             limit) {
      if (g.size() > 64) {
        throw ResourceError("congruence enumeration is limited to monoids "
                            "with at most 64 elements (got "
                            + std::to_string(g.size()) + ")");
      }
      Relation const base = base_relation(g);
      std::vector<std::pair<Elem, Elem>> principal;
      for (Elem x = 0; x < g.size(); ++x) {
        for (Elem y = 0; y < g.size(); ++y) {
          bool wanted = g.dsig() == DSignature::pos ? x != y : x < y;
          if (wanted && !base.test(x, y)) {
            principal.emplace_back(x, y);
          }
        }
      }
      std::vector<Relation> all{base};
      std::set<Relation>    seen{base};
      for (auto [x, y] : principal) {
        std::size_t const cur = all.size();
        for (std::size_t i = 0; i < cur; ++i) {
          if (all[i].test(x, y)) {
            continue;
          }
          Relation r = all[i];
          r.set(x, y);
          close(g, r, {{x, y}});
          if (seen.insert(r).second) {
            all.push_back(std::move(r));
            if (all.size() > limit) {
              throw ResourceError("more than " + std::to_string(limit)
                                  + " congruences");
            }
          }
        }
      }
      return all;
    }

    bool larger_first(GeneratedDMonoid const& x, GeneratedDMonoid const& y) {
      if (x.size() != y.size()) {
        return x.size() > y.size();
      }
      return x < y;
    }
  }  // namespace

  std::pair<GeneratedDMonoid, DMonoidMorphism>
  quotient(GeneratedDMonoid const&                   g,
           std::vector<std::pair<Elem, Elem>> const& pairs) {
    Relation                           r = base_relation(g);
    std::vector<std::pair<Elem, Elem>> work;
    for (auto [x, y] : pairs) {
      if (x >= g.size() || y >= g.size()) {
        throw InputError("quotient pair out of range");
      }
      if (r.set(x, y)) {
        work.emplace_back(x, y);
      }
    }
    close(g, r, std::move(work));
    return quotient_by(g, r);
  }

  std::vector<GeneratedDMonoid> enumerate_quotients(GeneratedDMonoid const& g,
                                                    std::size_t size_bound,
                                                    std::size_t limit) {
    std::vector<GeneratedDMonoid> out;
    for (auto const& r : congruences(g, limit)) {
      if (class_count(r) <= size_bound) {
        out.push_back(quotient_by(g, r).first);
      }
    }
    std::sort(out.begin(), out.end(), larger_first);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration of generated monoids
  ////////////////////////////////////////////////////////////////////////

  GeneratedDMonoid word_monoid(GeneratedDMonoid const& g) {
    Ambient amb = ambient_of(g);
    amb.dsig    = DSignature::set;
    return generate(amb, g.size() + 1).monoid;
  }

  GeneratedDMonoid free_extension(GeneratedDMonoid const& w, DSignature dsig) {
    if (w.dsig() != DSignature::set) {
      throw InputError("free extensions start from a SET monoid");
    }
    if (dsig != DSignature::slat && dsig != DSignature::z2vec) {
      throw InputError("free extensions target SLAT or Z2VEC");
    }
    std::size_t const n = w.size();
    if (n > 16) {
      throw ResourceError("free extension of a monoid with more than 16 "
                          "elements");
    }
    auto const& m   = w.monoid();
    bool const  z2  = dsig == DSignature::z2vec;
    auto        bit = [](Elem x) -> Key { return {std::uint32_t(1) << x}; };
    Ambient     amb;
    amb.dsig     = dsig;
    amb.alphabet = w.alphabet();
    amb.unit     = bit(m.unit());
    for (Elem s : w.gens()) {
      amb.gens.push_back(bit(s));
    }
    amb.mult = [&m, n, z2](Key const& x, Key const& y) -> Key {
      std::uint32_t z = 0;
      for (Elem i = 0; i < n; ++i) {
        if (!(x[0] >> i & 1)) {
          continue;
        }
        for (Elem j = 0; j < n; ++j) {
          if (y[0] >> j & 1) {
            auto b = std::uint32_t(1) << m.mult(i, j);
            z      = z2 ? z ^ b : z | b;
          }
        }
      }
      return {z};
    };
    amb.plus = [z2](Key const& x, Key const& y) -> Key {
      return {z2 ? x[0] ^ y[0] : x[0] | y[0]};
    };
    amb.zero = {0};
    return generate(amb).monoid;
  }

  namespace {
    // Σ-generated SET monoids of size <= bound, found as right Cayley
    // graphs: canonically numbered automata whose transition monoid has as
    // many elements as the automaton has states.
    std::vector<GeneratedDMonoid> enumerate_set_monoids(Alphabet const& sigma,
                                                        std::size_t bound) {
      std::size_t const             k = sigma.size();
      std::vector<GeneratedDMonoid> out;
      std::size_t                   inspected = 0;
      for (std::size_t n = 1; n <= bound; ++n) {
        std::vector<CanonicalDfa::State> delta(n * k, 0);
        auto recurse = [&](auto&& self, std::size_t slot, std::size_t found)
            -> void {
          if (slot == n * k) {
            if (found != n) {
              return;
            }
            if (++inspected > 50'000'000) {
              throw ResourceError("monoid enumeration bound too large");
            }
            Ambient amb;
            amb.dsig     = DSignature::set;
            amb.alphabet = sigma;
            for (std::uint32_t q = 0; q < n; ++q) {
              amb.unit.push_back(q);
            }
            for (Letter a = 0; a < k; ++a) {
              Key t;
              for (std::size_t q = 0; q < n; ++q) {
                t.push_back(delta[q * k + a]);
              }
              amb.gens.push_back(std::move(t));
            }
            amb.mult = [](Key const& x, Key const& y) {
              Key z(x.size());
              for (std::size_t q = 0; q < x.size(); ++q) {
                z[q] = y[x[q]];
              }
              return z;
            };
            try {
              auto g = generate(amb, n).monoid;
              if (g.size() == n) {
                out.push_back(std::move(g));
              }
            } catch (ResourceError const&) {
              // More transformations than states: not a Cayley graph.
            }
            return;
          }
          std::size_t state = slot / k;
          if (state >= found) {
            return;
          }
          std::size_t top = std::min(found, n - 1);
          for (std::size_t t = 0; t <= top; ++t) {
            delta[slot] = static_cast<CanonicalDfa::State>(t);
            self(self, slot + 1, t == found ? found + 1 : found);
          }
        };
        recurse(recurse, 0, 1);
      }
      return out;
    }
  }  // namespace

  std::vector<GeneratedDMonoid> enumerate_generated(Alphabet const& alphabet,
                                                    DSignature      dsig,
                                                    std::size_t size_bound) {
    if (size_bound == 0) {
      return {};
    }
    auto                          base = enumerate_set_monoids(alphabet, size_bound);
    std::vector<GeneratedDMonoid> out;
    switch (dsig) {
      case DSignature::set:
        out = std::move(base);
        break;
      case DSignature::pos:
        for (auto const& m : base) {
          Ambient amb = ambient_of(m);
          amb.dsig    = DSignature::pos;
          amb.leq     = [](Key const& x, Key const& y) { return x == y; };
          auto discrete = generate(amb, m.size() + 1).monoid;
          for (auto const& r : congruences(discrete, 1'000'000)) {
            if (class_count(r) == m.size()) {
              out.push_back(quotient_by(discrete, r).first);
            }
          }
        }
        break;
      default:
        for (auto const& m : base) {
          for (auto& q : enumerate_quotients(free_extension(m, dsig),
                                             size_bound)) {
            out.push_back(std::move(q));
          }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

}  // namespace regvar
