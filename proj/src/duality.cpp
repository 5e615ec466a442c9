//
// regvar - regular languages, finite D-monoids and their dualities
//

#include "regvar/duality.hpp"

#include <algorithm>  // for sort, find
#include <bit>        // for has_single_bit
#include <map>        // for map
#include <set>        // for set

namespace regvar {

  ////////////////////////////////////////////////////////////////////////
  // FiniteCAlgebra
  ////////////////////////////////////////////////////////////////////////

  namespace {
    bool has_meet(CSignature c) {
      return c == CSignature::ba || c == CSignature::dlat;
    }

    void check_op(std::vector<Elem> const& t, std::size_t n, std::size_t arity,
                  char const* what) {
      std::size_t expected = arity == 2 ? n * n : n;
      if (t.size() != expected) {
        throw InputError(std::string(what) + " table has the wrong size");
      }
      for (Elem x : t) {
        if (x >= n) {
          throw InputError(std::string(what) + " table entry out of range");
        }
      }
    }
  }  // namespace

  FiniteCAlgebra::FiniteCAlgebra(CSignature        csig,
                                 std::size_t       n,
                                 std::vector<Elem> plus,
                                 std::vector<Elem> meet,
                                 std::vector<Elem> complement,
                                 Elem              zero,
                                 Elem              one)
      : _csig(csig),
        _size(n),
        _plus(std::move(plus)),
        _meet(std::move(meet)),
        _complement(std::move(complement)),
        _zero(zero),
        _one(one) {
    if (n == 0) {
      throw InputError("carriers must be non-empty");
    }
    check_op(_plus, n, 2, csig == CSignature::z2vec ? "addition" : "join");
    if (has_meet(csig)) {
      check_op(_meet, n, 2, "meet");
    } else {
      _meet.clear();
      _one = 0;
    }
    if (csig == CSignature::ba) {
      check_op(_complement, n, 1, "complement");
    } else {
      _complement.clear();
    }
    if (_zero >= n || _one >= n) {
      throw InputError("constant out of range");
    }
    if (auto v = violations(); !v.empty()) {
      throw InputError(std::string(to_string(csig)) + " law fails: "
                       + v.front());
    }
  }

  FiniteCAlgebra FiniteCAlgebra::two(CSignature csig) {
    switch (csig) {
      case CSignature::ba:
        return FiniteCAlgebra(csig, 2, {0, 1, 1, 1}, {0, 0, 0, 1}, {1, 0}, 0, 1);
      case CSignature::dlat:
        return FiniteCAlgebra(csig, 2, {0, 1, 1, 1}, {0, 0, 0, 1}, {}, 0, 1);
      case CSignature::slat:
        return FiniteCAlgebra(csig, 2, {0, 1, 1, 1}, {}, {}, 0, 0);
      case CSignature::z2vec:
        break;
    }
    return FiniteCAlgebra(csig, 2, {0, 1, 1, 0}, {}, {}, 0, 0);
  }

  FiniteCAlgebra FiniteCAlgebra::boolean(std::size_t atoms) {
    if (atoms > 10) {
      throw ResourceError("boolean algebras are limited to 10 atoms");
    }
    std::size_t const n = std::size_t(1) << atoms;
    std::vector<Elem> join(n * n), meet(n * n), compl_(n);
    for (Elem x = 0; x < n; ++x) {
      compl_[x] = static_cast<Elem>((n - 1) & ~x);
      for (Elem y = 0; y < n; ++y) {
        join[x * n + y] = x | y;
        meet[x * n + y] = x & y;
      }
    }
    return FiniteCAlgebra(CSignature::ba, n, std::move(join), std::move(meet),
                          std::move(compl_), 0, static_cast<Elem>(n - 1));
  }

  FiniteCAlgebra FiniteCAlgebra::down_sets(FiniteDObject const& poset) {
    std::size_t const p = poset.size();
    if (p > 12) {
      throw ResourceError("down-set lattices are limited to 12 points");
    }
    std::vector<std::uint32_t> sets;
    for (std::uint32_t s = 0; s < (std::uint32_t(1) << p); ++s) {
      bool down = true;
      for (Elem x = 0; x < p && down; ++x) {
        for (Elem y = 0; y < p && down; ++y) {
          if ((s >> y & 1) && poset.leq(x, y) && !(s >> x & 1)) {
            down = false;
          }
        }
      }
      if (down) {
        sets.push_back(s);
      }
    }
    std::map<std::uint32_t, Elem> id;
    for (Elem i = 0; i < sets.size(); ++i) {
      id[sets[i]] = i;
    }
    std::size_t const n = sets.size();
    std::vector<Elem> join(n * n), meet(n * n);
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        join[x * n + y] = id.at(sets[x] | sets[y]);
        meet[x * n + y] = id.at(sets[x] & sets[y]);
      }
    }
    return FiniteCAlgebra(CSignature::dlat, n, std::move(join), std::move(meet),
                          {}, 0, static_cast<Elem>(n - 1));
  }

  FiniteCAlgebra FiniteCAlgebra::semilattice(std::size_t       n,
                                             std::vector<Elem> join,
                                             Elem              zero) {
    return FiniteCAlgebra(CSignature::slat, n, std::move(join), {}, {}, zero, 0);
  }

  FiniteCAlgebra FiniteCAlgebra::space(std::size_t dim) {
    if (dim > 10) {
      throw ResourceError("Z2-spaces are limited to dimension 10");
    }
    std::size_t const n = std::size_t(1) << dim;
    std::vector<Elem> add(n * n);
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        add[x * n + y] = x ^ y;
      }
    }
    return FiniteCAlgebra(CSignature::z2vec, n, std::move(add), {}, {}, 0, 0);
  }

  std::vector<Elem> FiniteCAlgebra::atoms() const {
    if (_csig != CSignature::ba) {
      throw InputError("atoms are defined for boolean algebras only");
    }
    std::vector<Elem> out;
    for (Elem x = 0; x < _size; ++x) {
      if (x == _zero) {
        continue;
      }
      bool minimal = true;
      for (Elem y = 0; y < _size && minimal; ++y) {
        if (y != _zero && y != x && leq(y, x)) {
          minimal = false;
        }
      }
      if (minimal) {
        out.push_back(x);
      }
    }
    return out;
  }

  std::vector<Elem> FiniteCAlgebra::join_irreducibles() const {
    if (!has_meet(_csig)) {
      throw InputError("join-irreducibles are defined for lattices only");
    }
    std::vector<Elem> out;
    for (Elem x = 0; x < _size; ++x) {
      if (x == _zero) {
        continue;
      }
      bool irreducible = true;
      for (Elem y = 0; y < _size && irreducible; ++y) {
        for (Elem z = 0; z < _size && irreducible; ++z) {
          if (y != x && z != x && plus(y, z) == x) {
            irreducible = false;
          }
        }
      }
      if (irreducible) {
        out.push_back(x);
      }
    }
    return out;
  }

  std::vector<std::string> FiniteCAlgebra::violations() const {
    std::vector<std::string> out;
    std::size_t const        n = _size;
    auto                     binary_laws
        = [&](std::vector<Elem> const& t, std::string const& name,
              bool idempotent, Elem unit) {
            auto op = [&](Elem x, Elem y) { return t[x * n + y]; };
            for (Elem x = 0; x < n; ++x) {
              if (op(unit, x) != x) {
                out.push_back(name + " has no unit at " + std::to_string(x));
                return;
              }
              if (idempotent && op(x, x) != x) {
                out.push_back(name + " is not idempotent");
                return;
              }
              for (Elem y = 0; y < n; ++y) {
                if (op(x, y) != op(y, x)) {
                  out.push_back(name + " is not commutative");
                  return;
                }
                for (Elem z = 0; z < n; ++z) {
                  if (op(op(x, y), z) != op(x, op(y, z))) {
                    out.push_back(name + " is not associative");
                    return;
                  }
                }
              }
            }
          };
    switch (_csig) {
      case CSignature::z2vec:
        binary_laws(_plus, "addition", false, _zero);
        for (Elem x = 0; x < n; ++x) {
          if (plus(x, x) != _zero) {
            out.push_back("x + x = 0 fails");
            break;
          }
        }
        if (!std::has_single_bit(n)) {
          out.push_back("size is not a power of two");
        }
        break;
      case CSignature::slat:
        binary_laws(_plus, "join", true, _zero);
        break;
      default:
        binary_laws(_plus, "join", true, _zero);
        binary_laws(_meet, "meet", true, _one);
        [&] {
          for (Elem x = 0; x < n; ++x) {
            for (Elem y = 0; y < n; ++y) {
              if (plus(x, meet(x, y)) != x || meet(x, plus(x, y)) != x) {
                out.push_back("absorption fails");
                return;
              }
              for (Elem z = 0; z < n; ++z) {
                if (meet(x, plus(y, z)) != plus(meet(x, y), meet(x, z))) {
                  out.push_back("distributivity fails");
                  return;
                }
              }
            }
          }
        }();
        if (_csig == CSignature::ba) {
          for (Elem x = 0; x < n; ++x) {
            if (plus(x, complement(x)) != _one
                || meet(x, complement(x)) != _zero) {
              out.push_back("complement law fails at " + std::to_string(x));
              break;
            }
          }
        }
    }
    return out;
  }

  bool CAlgebraMorphism::is_bijective() const {
    if (source.size() != target.size()) {
      return false;
    }
    std::vector<bool> hit(target.size(), false);
    for (Elem y : table) {
      if (hit[y]) {
        return false;
      }
      hit[y] = true;
    }
    return true;
  }

  bool is_homomorphism(CAlgebraMorphism const& h) {
    auto const& a = h.source;
    auto const& b = h.target;
    if (a.csig() != b.csig() || h.table.size() != a.size()) {
      return false;
    }
    for (Elem y : h.table) {
      if (y >= b.size()) {
        return false;
      }
    }
    if (h(a.zero()) != b.zero()) {
      return false;
    }
    if (has_meet(a.csig()) && h(a.one()) != b.one()) {
      return false;
    }
    for (Elem x = 0; x < a.size(); ++x) {
      if (a.csig() == CSignature::ba
          && h(a.complement(x)) != b.complement(h(x))) {
        return false;
      }
      for (Elem y = 0; y < a.size(); ++y) {
        if (h(a.plus(x, y)) != b.plus(h(x), h(y))) {
          return false;
        }
        if (has_meet(a.csig()) && h(a.meet(x, y)) != b.meet(h(x), h(y))) {
          return false;
        }
      }
    }
    return true;
  }

  FiniteDObject two_object(DSignature dsig) {
    switch (dsig) {
      case DSignature::set:
        return FiniteDObject::set(2);
      case DSignature::pos:
        return FiniteDObject::poset(2, {1, 1, 0, 1});
      case DSignature::slat:
        return FiniteDObject::semilattice(2, {0, 1, 1, 1}, 0);
      case DSignature::z2vec:
        break;
    }
    return FiniteDObject::space(1);
  }

  ////////////////////////////////////////////////////////////////////////
  // Maps into {0, 1}
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Backtracking search for all maps h: {0..n-1} -> {0, 1} subject to
    // constants, h(op(x, y)) = f(h(x), h(y)), h(u(x)) = g(h(x)) and
    // monotonicity, with forward propagation.
    class TwoValuedSearch {
     public:
      enum class Fn : std::uint8_t { or_, and_, xor_, not_ };

      explicit TwoValuedSearch(std::size_t n) : _n(n), _val(n, -1) {}

      void constant(Elem x, bool v) {
        _consts.emplace_back(x, v);
      }
      void binary(std::vector<Elem> const& table, Fn f) {
        _binary.emplace_back(&table, f);
      }
      void unary(std::vector<Elem> const& table) {
        _unary.push_back(&table);
      }
      void order(FiniteDObject const& x) {
        _order = &x;
      }

      std::vector<HomVec> run() {
        _out.clear();
        for (auto [x, v] : _consts) {
          if (!assign(x, v)) {
            return {};
          }
        }
        search();
        std::sort(_out.begin(), _out.end());
        return std::move(_out);
      }

     private:
      static bool apply(Fn f, bool x, bool y) {
        switch (f) {
          case Fn::or_:
            return x || y;
          case Fn::and_:
            return x && y;
          case Fn::xor_:
            return x != y;
          case Fn::not_:
            break;
        }
        return !x;
      }

      bool set(Elem x, bool v, std::vector<Elem>& work) {
        if (_val[x] >= 0) {
          return _val[x] == static_cast<int>(v);
        }
        _val[x] = v;
        _trail.push_back(x);
        work.push_back(x);
        return true;
      }

      bool assign(Elem x0, bool v0) {
        std::vector<Elem> work;
        if (!set(x0, v0, work)) {
          return false;
        }
        while (!work.empty()) {
          Elem x = work.back();
          work.pop_back();
          bool hx = _val[x];
          for (auto const* u : _unary) {
            if (!set((*u)[x], !hx, work)) {
              return false;
            }
          }
          for (auto [t, f] : _binary) {
            for (Elem y = 0; y < _n; ++y) {
              if (_val[y] < 0) {
                continue;
              }
              bool v = apply(f, hx, _val[y]);
              if (!set((*t)[x * _n + y], v, work)
                  || !set((*t)[y * _n + x], apply(f, _val[y], hx), work)) {
                return false;
              }
            }
          }
          if (_order) {
            for (Elem y = 0; y < _n; ++y) {
              if (hx && _order->leq(x, y) && !set(y, true, work)) {
                return false;
              }
              if (!hx && _order->leq(y, x) && !set(y, false, work)) {
                return false;
              }
            }
          }
        }
        return true;
      }

      void undo(std::size_t mark) {
        while (_trail.size() > mark) {
          _val[_trail.back()] = -1;
          _trail.pop_back();
        }
      }

      void search() {
        auto it = std::find(_val.begin(), _val.end(), -1);
        if (it == _val.end()) {
          HomVec h(_n);
          for (std::size_t i = 0; i < _n; ++i) {
            h[i] = static_cast<std::uint8_t>(_val[i]);
          }
          _out.push_back(std::move(h));
          return;
        }
        Elem x = static_cast<Elem>(it - _val.begin());
        for (bool v : {false, true}) {
          std::size_t mark = _trail.size();
          if (assign(x, v)) {
            search();
          }
          undo(mark);
        }
      }

      std::size_t                                         _n;
      std::vector<int>                                    _val;
      std::vector<Elem>                                   _trail;
      std::vector<std::pair<Elem, bool>>                  _consts;
      std::vector<std::pair<std::vector<Elem> const*, Fn>> _binary;
      std::vector<std::vector<Elem> const*>               _unary;
      FiniteDObject const*                                _order = nullptr;
      std::vector<HomVec>                                 _out;
    };

    Elem index_of(std::vector<HomVec> const& sorted, HomVec const& h) {
      auto it = std::lower_bound(sorted.begin(), sorted.end(), h);
      if (it == sorted.end() || *it != h) {
        throw InvariantError("pointwise combination of homomorphisms is not "
                             "a homomorphism");
      }
      return static_cast<Elem>(it - sorted.begin());
    }

    template <typename F>
    std::vector<Elem> pointwise(std::vector<HomVec> const& hs, F&& f) {
      std::size_t const n = hs.size();
      std::vector<Elem> t(n * n);
      for (Elem i = 0; i < n; ++i) {
        for (Elem j = 0; j < n; ++j) {
          HomVec h(hs[i].size());
          for (std::size_t k = 0; k < h.size(); ++k) {
            h[k] = f(hs[i][k], hs[j][k]);
          }
          t[i * n + j] = index_of(hs, h);
        }
      }
      return t;
    }

    HomVec constant_map(std::size_t n, std::uint8_t v) {
      return HomVec(n, v);
    }
  }  // namespace

  std::vector<HomVec> homs_into_two(FiniteCAlgebra const& a) {
    using Fn = TwoValuedSearch::Fn;
    TwoValuedSearch s(a.size());
    s.constant(a.zero(), false);
    switch (a.csig()) {
      case CSignature::ba:
        s.unary(a.complement_table());
        [[fallthrough]];
      case CSignature::dlat:
        s.constant(a.one(), true);
        s.binary(a.plus_table(), Fn::or_);
        s.binary(a.meet_table(), Fn::and_);
        break;
      case CSignature::slat:
        s.binary(a.plus_table(), Fn::or_);
        break;
      case CSignature::z2vec:
        s.binary(a.plus_table(), Fn::xor_);
        break;
    }
    return s.run();
  }

  std::vector<HomVec> d_maps_into_two(FiniteDObject const& x) {
    using Fn = TwoValuedSearch::Fn;
    TwoValuedSearch s(x.size());
    switch (x.dsig()) {
      case DSignature::set:
        if (x.size() > 20) {
          throw ResourceError("powerset of a set with more than 20 elements");
        }
        break;
      case DSignature::pos:
        s.order(x);
        break;
      case DSignature::slat:
        s.constant(x.zero(), false);
        s.binary(x.op_table(), Fn::or_);
        break;
      case DSignature::z2vec:
        s.constant(x.zero(), false);
        s.binary(x.op_table(), Fn::xor_);
        break;
    }
    return s.run();
  }

  ////////////////////////////////////////////////////////////////////////
  // Duality
  ////////////////////////////////////////////////////////////////////////

  DualObject dual_object(FiniteCAlgebra const& a) {
    auto              homs = homs_into_two(a);
    std::size_t const n    = homs.size();
    FiniteDObject obj;
    switch (a.csig()) {
      case CSignature::ba:
        obj = FiniteDObject::set(n);
        break;
      case CSignature::dlat: {
        std::vector<std::uint8_t> leq(n * n);
        for (Elem i = 0; i < n; ++i) {
          for (Elem j = 0; j < n; ++j) {
            bool le = true;
            for (std::size_t k = 0; k < a.size() && le; ++k) {
              le = homs[i][k] <= homs[j][k];
            }
            leq[i * n + j] = le;
          }
        }
        obj = FiniteDObject::poset(n, std::move(leq));
        break;
      }
      case CSignature::slat:
        obj = FiniteDObject::semilattice(
            n,
            pointwise(homs, [](auto x, auto y) { return x | y; }),
            index_of(homs, constant_map(a.size(), 0)));
        break;
      case CSignature::z2vec:
        obj = FiniteDObject::space(
            n,
            pointwise(homs, [](auto x, auto y) { return x ^ y; }),
            index_of(homs, constant_map(a.size(), 0)));
        break;
    }
    return {std::move(obj), std::move(homs)};
  }

  DMap dual_morphism(CAlgebraMorphism const& h) {
    if (!is_homomorphism(h)) {
      throw InputError("not a homomorphism");
    }
    auto              src = dual_object(h.target);
    auto              tgt = dual_object(h.source);
    std::vector<Elem> table;
    for (auto const& f : src.homs) {
      HomVec fh(h.source.size());
      for (Elem x = 0; x < h.source.size(); ++x) {
        fh[x] = f[h(x)];
      }
      table.push_back(index_of(tgt.homs, fh));
    }
    return {std::move(src.object), std::move(tgt.object), std::move(table)};
  }

  PObject p_object(FiniteDObject const& x) {
    auto              maps = d_maps_into_two(x);
    std::size_t const n    = maps.size();
    auto              orf  = [](auto u, auto v) { return u | v; };
    auto              andf = [](auto u, auto v) { return u & v; };
    Elem const        zero = index_of(maps, constant_map(x.size(), 0));
    FiniteCAlgebra    alg;
    switch (x.dsig()) {
      case DSignature::set: {
        std::vector<Elem> compl_;
        for (auto const& m : maps) {
          HomVec c(m.size());
          for (std::size_t k = 0; k < m.size(); ++k) {
            c[k] = !m[k];
          }
          compl_.push_back(index_of(maps, c));
        }
        alg = FiniteCAlgebra(CSignature::ba, n, pointwise(maps, orf),
                             pointwise(maps, andf), std::move(compl_), zero,
                             index_of(maps, constant_map(x.size(), 1)));
        break;
      }
      case DSignature::pos:
        alg = FiniteCAlgebra(CSignature::dlat, n, pointwise(maps, orf),
                             pointwise(maps, andf), {}, zero,
                             index_of(maps, constant_map(x.size(), 1)));
        break;
      case DSignature::slat:
        alg = FiniteCAlgebra::semilattice(n, pointwise(maps, orf), zero);
        break;
      case DSignature::z2vec:
        alg = FiniteCAlgebra(CSignature::z2vec, n,
                             pointwise(maps, [](auto u, auto v) { return u ^ v; }),
                             {}, {}, zero, 0);
        break;
    }
    return {std::move(alg), std::move(maps)};
  }

  CAlgebraMorphism p_morphism(DMap const& g) {
    if (!is_d_map(g.source, g.target, g.table)) {
      throw InputError("not a D-map");
    }
    auto              src = p_object(g.target);
    auto              tgt = p_object(g.source);
    std::vector<Elem> table;
    for (auto const& p : src.maps) {
      HomVec pg(g.source.size());
      for (Elem x = 0; x < g.source.size(); ++x) {
        pg[x] = p[g(x)];
      }
      table.push_back(index_of(tgt.maps, pg));
    }
    return {std::move(src.algebra), std::move(tgt.algebra), std::move(table)};
  }

  CAlgebraMorphism unit_iso(FiniteCAlgebra const& a) {
    auto              d = dual_object(a);
    auto              p = p_object(d.object);
    std::vector<Elem> table;
    for (Elem x = 0; x < a.size(); ++x) {
      HomVec ev(d.homs.size());
      for (std::size_t i = 0; i < d.homs.size(); ++i) {
        ev[i] = d.homs[i][x];
      }
      auto it = std::lower_bound(p.maps.begin(), p.maps.end(), ev);
      if (it == p.maps.end() || *it != ev) {
        throw InvariantError("evaluation is not a D-map on the dual");
      }
      table.push_back(static_cast<Elem>(it - p.maps.begin()));
    }
    CAlgebraMorphism h{a, std::move(p.algebra), std::move(table)};
    if (!h.is_bijective() || !is_homomorphism(h)) {
      throw InvariantError("the unit of the duality is not an isomorphism");
    }
    return h;
  }

  DMap counit_iso(FiniteDObject const& x) {
    auto              p = p_object(x);
    auto              d = dual_object(p.algebra);
    std::vector<Elem> table;
    for (Elem e = 0; e < x.size(); ++e) {
      HomVec ev(p.maps.size());
      for (std::size_t i = 0; i < p.maps.size(); ++i) {
        ev[i] = p.maps[i][e];
      }
      auto it = std::lower_bound(d.homs.begin(), d.homs.end(), ev);
      if (it == d.homs.end() || *it != ev) {
        throw InvariantError("evaluation is not a homomorphism on P");
      }
      table.push_back(static_cast<Elem>(it - d.homs.begin()));
    }
    DMap f{x, std::move(d.object), std::move(table)};
    bool ok = f.target.size() == x.size() && is_d_map(f.source, f.target, f.table);
    std::vector<Elem> inverse(x.size(), 0);
    for (Elem e = 0; e < x.size() && ok; ++e) {
      inverse[f(e)] = e;
    }
    ok = ok
         && std::set<Elem>(f.table.begin(), f.table.end()).size() == x.size()
         && is_d_map(f.target, f.source, inverse);
    if (!ok) {
      throw InvariantError("the counit of the duality is not an isomorphism");
    }
    return f;
  }

}  // namespace regvar
