//
// regvar - regular languages, finite D-monoids and their dualities
//

#include "regvar/reglang.hpp"

#include <algorithm>  // for sort, unique, fill
#include <cstdio>     // for snprintf
#include <deque>      // for deque
#include <map>        // for map
#include <set>        // for set
#include <utility>    // for pair

namespace regvar {

  using State = CanonicalDfa::State;

  ////////////////////////////////////////////////////////////////////////
  // Regex parsing
  ////////////////////////////////////////////////////////////////////////

  namespace {

    using RegexPtr = std::shared_ptr<Regex const>;

    RegexPtr make(Regex::Kind k, std::vector<RegexPtr> children = {}) {
      Regex r;
      r.kind     = k;
      r.children = std::move(children);
      return std::make_shared<Regex const>(std::move(r));
    }

    class RegexParser {
     public:
      RegexParser(std::string_view text, Alphabet const& alphabet)
          : _text(text), _alphabet(alphabet) {}

      RegexPtr parse() {
        skip();
        if (_pos == _text.size()) {
          throw InputError("empty regex (use 0 for the empty language and e "
                           "for the empty word)");
        }
        RegexPtr r = parse_union();
        skip();
        if (_pos != _text.size()) {
          fail("unexpected character");
        }
        return r;
      }

     private:
      [[noreturn]] void fail(std::string const& what) const {
        throw InputError("regex: " + what + " at position "
                         + std::to_string(_pos) + " in \""
                         + std::string(_text) + "\"");
      }

      void skip() {
        while (_pos < _text.size()
               && (_text[_pos] == ' ' || _text[_pos] == '\t')) {
          ++_pos;
        }
      }

      bool peek(char c) {
        skip();
        return _pos < _text.size() && _text[_pos] == c;
      }

      bool at_atom_start() {
        skip();
        if (_pos == _text.size()) {
          return false;
        }
        char c = _text[_pos];
        return c == '(' || c == '~' || c == '0' || c == 'e'
               || _alphabet.find(c).has_value()
               || !(c == '|' || c == '&' || c == '^' || c == ')'
                    || c == '*');
      }

      RegexPtr parse_binary(Regex::Kind k, char op, RegexPtr (RegexParser::*sub)()) {
        RegexPtr l = (this->*sub)();
        while (peek(op)) {
          ++_pos;
          RegexPtr r = (this->*sub)();
          l          = make(k, {l, r});
        }
        return l;
      }

      RegexPtr parse_union() {
        return parse_binary(Regex::Kind::alt, '|', &RegexParser::parse_xor);
      }

      RegexPtr parse_xor() {
        return parse_binary(Regex::Kind::xor_, '^', &RegexParser::parse_inter);
      }

      RegexPtr parse_inter() {
        return parse_binary(
            Regex::Kind::inter, '&', &RegexParser::parse_concat);
      }

      RegexPtr parse_concat() {
        RegexPtr l = parse_unary();
        while (at_atom_start()) {
          RegexPtr r = parse_unary();
          l          = make(Regex::Kind::concat, {l, r});
        }
        return l;
      }

      RegexPtr parse_unary() {
        if (peek('~')) {
          ++_pos;
          return make(Regex::Kind::complement, {parse_unary()});
        }
        RegexPtr r = parse_atom();
        while (peek('*')) {
          ++_pos;
          r = make(Regex::Kind::star, {r});
        }
        return r;
      }

      RegexPtr parse_atom() {
        skip();
        if (_pos == _text.size()) {
          fail("unexpected end of input");
        }
        char c = _text[_pos];
        if (c == '(') {
          ++_pos;
          RegexPtr r = parse_union();
          if (!peek(')')) {
            fail("expected ')'");
          }
          ++_pos;
          return r;
        }
        ++_pos;
        if (c == '0') {
          return make(Regex::Kind::empty);
        } else if (c == 'e') {
          return make(Regex::Kind::epsilon);
        }
        auto a = _alphabet.find(c);
        if (!a) {
          --_pos;
          fail(std::string("unknown literal '") + c + "'");
        }
        Regex r;
        r.kind   = Regex::Kind::literal;
        r.letter = *a;
        return std::make_shared<Regex const>(std::move(r));
      }

      std::string_view _text;
      Alphabet const&  _alphabet;
      std::size_t      _pos = 0;
    };

    int precedence(Regex::Kind k) {
      switch (k) {
        case Regex::Kind::alt:
          return 0;
        case Regex::Kind::xor_:
          return 1;
        case Regex::Kind::inter:
          return 2;
        case Regex::Kind::concat:
          return 3;
        case Regex::Kind::complement:
          return 4;
        case Regex::Kind::star:
          return 5;
        default:
          return 6;
      }
    }

    std::string format(Regex const& r, Alphabet const& alphabet, int outer) {
      std::string s;
      int         p = precedence(r.kind);
      switch (r.kind) {
        case Regex::Kind::empty:
          s = "0";
          break;
        case Regex::Kind::epsilon:
          s = "e";
          break;
        case Regex::Kind::literal:
          s = alphabet.symbol(r.letter);
          break;
        case Regex::Kind::star:
          s = format(*r.children[0], alphabet, p) + "*";
          break;
        case Regex::Kind::complement:
          s = "~" + format(*r.children[0], alphabet, p);
          break;
        case Regex::Kind::concat:
          s = format(*r.children[0], alphabet, p)
              + format(*r.children[1], alphabet, p + 1);
          break;
        default: {
          char op = r.kind == Regex::Kind::alt    ? '|'
                    : r.kind == Regex::Kind::xor_ ? '^'
                                                  : '&';
          s = format(*r.children[0], alphabet, p) + op
              + format(*r.children[1], alphabet, p + 1);
        }
      }
      return p < outer ? "(" + s + ")" : s;
    }

  }  // namespace

  Regex Regex::parse(std::string_view text, Alphabet const& alphabet) {
    return *RegexParser(text, alphabet).parse();
  }

  std::string Regex::to_string(Alphabet const& alphabet) const {
    return format(*this, alphabet, 0);
  }

  ////////////////////////////////////////////////////////////////////////
  // Minimization
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // Hopcroft partition refinement on a complete DFA whose states are all
    // reachable. Returns the block index of every state.
    std::vector<std::uint32_t> hopcroft(std::size_t              n,
                                        std::size_t              k,
                                        std::vector<State> const& delta,
                                        std::vector<bool> const& accepting) {
      std::vector<std::uint32_t>             block_of(n, 0);
      std::vector<std::vector<State>>        blocks;
      std::vector<State>                     finals, others;
      for (State q = 0; q < n; ++q) {
        (accepting[q] ? finals : others).push_back(q);
      }
      if (!finals.empty()) {
        blocks.push_back(finals);
      }
      if (!others.empty()) {
        blocks.push_back(others);
      }
      for (std::uint32_t b = 0; b < blocks.size(); ++b) {
        for (State q : blocks[b]) {
          block_of[q] = b;
        }
      }
      if (blocks.size() < 2) {
        return block_of;
      }

      // Predecessor lists in CSR form: inv_start[a * (n + 1) + q].
      std::vector<std::size_t> inv_start(k * (n + 1), 0);
      std::vector<State>       inv(k * n);
      for (State p = 0; p < n; ++p) {
        for (std::size_t a = 0; a < k; ++a) {
          ++inv_start[a * (n + 1) + delta[p * k + a] + 1];
        }
      }
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t q = 0; q < n; ++q) {
          inv_start[a * (n + 1) + q + 1] += inv_start[a * (n + 1) + q];
        }
      }
      {
        std::vector<std::size_t> fill(inv_start);
        for (State p = 0; p < n; ++p) {
          for (std::size_t a = 0; a < k; ++a) {
            State q                         = delta[p * k + a];
            inv[a * n + fill[a * (n + 1) + q]++] = p;
          }
        }
      }

      std::deque<std::pair<std::uint32_t, std::size_t>> work;
      std::vector<std::uint8_t>                         in_work;
      auto mark_work = [&](std::uint32_t b, std::size_t a) {
        if (in_work.size() < (b + 1) * k) {
          in_work.resize((b + 1) * k, 0);
        }
        if (!in_work[b * k + a]) {
          in_work[b * k + a] = 1;
          work.emplace_back(b, a);
        }
      };
      std::uint32_t smaller = blocks[0].size() <= blocks[1].size() ? 0 : 1;
      for (std::size_t a = 0; a < k; ++a) {
        mark_work(smaller, a);
      }

      std::vector<std::uint8_t>  marked(n, 0);
      std::vector<std::size_t>   hits;
      std::vector<std::uint32_t> touched;
      while (!work.empty()) {
        auto [b, a] = work.front();
        work.pop_front();
        in_work[b * k + a] = 0;

        std::vector<State> splitter;
        for (State q : blocks[b]) {
          for (std::size_t i = inv_start[a * (n + 1) + q];
               i < inv_start[a * (n + 1) + q + 1];
               ++i) {
            splitter.push_back(inv[a * n + i]);
          }
        }
        hits.assign(blocks.size(), 0);
        touched.clear();
        for (State p : splitter) {
          if (!marked[p]) {
            marked[p]       = 1;
            std::uint32_t y = block_of[p];
            if (hits[y]++ == 0) {
              touched.push_back(y);
            }
          }
        }
        for (std::uint32_t y : touched) {
          if (hits[y] == blocks[y].size()) {
            continue;
          }
          std::vector<State> inside, outside;
          for (State q : blocks[y]) {
            (marked[q] ? inside : outside).push_back(q);
          }
          auto z    = static_cast<std::uint32_t>(blocks.size());
          blocks[y] = std::move(outside);
          blocks.push_back(std::move(inside));
          for (State q : blocks[z]) {
            block_of[q] = z;
          }
          for (std::size_t c = 0; c < k; ++c) {
            if (in_work.size() > y * k + c && in_work[y * k + c]) {
              mark_work(z, c);
            } else {
              mark_work(blocks[y].size() <= blocks[z].size() ? y : z, c);
            }
          }
        }
        for (State p : splitter) {
          marked[p] = 0;
        }
      }
      return block_of;
    }

  }  // namespace

  CanonicalDfa CanonicalDfa::from_dfa(Alphabet           alphabet,
                                      std::size_t        states,
                                      State              initial,
                                      std::vector<State> delta,
                                      std::vector<bool>  accepting) {
    std::size_t const k = alphabet.size();
    if (k == 0) {
      throw InputError("DFA alphabet must be non-empty");
    }
    if (states == 0 || initial >= states || delta.size() != states * k
        || accepting.size() != states) {
      throw InputError("malformed DFA tables");
    }
    for (State q : delta) {
      if (q >= states) {
        throw InputError("DFA transition target out of range");
      }
    }

    // Reachable part, in BFS order.
    std::vector<State> reach_id(states, UINT32_MAX);
    std::vector<State> order{initial};
    reach_id[initial] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t a = 0; a < k; ++a) {
        State r = delta[order[i] * k + a];
        if (reach_id[r] == UINT32_MAX) {
          reach_id[r] = static_cast<State>(order.size());
          order.push_back(r);
        }
      }
    }
    std::size_t const  n = order.size();
    std::vector<State> rdelta(n * k);
    std::vector<bool>  raccept(n);
    for (std::size_t i = 0; i < n; ++i) {
      raccept[i] = accepting[order[i]];
      for (std::size_t a = 0; a < k; ++a) {
        rdelta[i * k + a] = reach_id[delta[order[i] * k + a]];
      }
    }

    auto block_of = hopcroft(n, k, rdelta, raccept);

    // Quotient and renumber in BFS order from the initial block.
    std::size_t nblocks = 0;
    for (auto b : block_of) {
      nblocks = std::max<std::size_t>(nblocks, b + 1);
    }
    std::vector<State> witness(nblocks, UINT32_MAX);
    for (State q = 0; q < n; ++q) {
      if (witness[block_of[q]] == UINT32_MAX) {
        witness[block_of[q]] = q;
      }
    }
    std::vector<State> canon(nblocks, UINT32_MAX);
    std::vector<State> bfs{block_of[0]};
    canon[block_of[0]] = 0;
    for (std::size_t i = 0; i < bfs.size(); ++i) {
      State rep = witness[bfs[i]];
      for (std::size_t a = 0; a < k; ++a) {
        State b = block_of[rdelta[rep * k + a]];
        if (canon[b] == UINT32_MAX) {
          canon[b] = static_cast<State>(bfs.size());
          bfs.push_back(b);
        }
      }
    }

    CanonicalDfa out;
    out._alphabet = std::move(alphabet);
    out._delta.resize(nblocks * k);
    out._accepting.resize(nblocks);
    for (std::size_t i = 0; i < nblocks; ++i) {
      State rep          = witness[bfs[i]];
      out._accepting[i]  = raccept[rep];
      for (std::size_t a = 0; a < k; ++a) {
        out._delta[i * k + a] = canon[block_of[rdelta[rep * k + a]]];
      }
    }
    return out;
  }

  CanonicalDfa CanonicalDfa::empty_language(Alphabet const& alphabet) {
    return from_dfa(
        alphabet, 1, 0, std::vector<State>(alphabet.size(), 0), {false});
  }

  CanonicalDfa CanonicalDfa::full_language(Alphabet const& alphabet) {
    return from_dfa(
        alphabet, 1, 0, std::vector<State>(alphabet.size(), 0), {true});
  }

  State CanonicalDfa::run(State q, Word const& w) const {
    std::size_t const k = _alphabet.size();
    for (Letter a : w) {
      if (a >= k) {
        throw InputError("word letter outside the DFA alphabet");
      }
      q = _delta[q * k + a];
    }
    return q;
  }

  bool CanonicalDfa::is_empty() const noexcept {
    return _accepting.size() == 1 && !_accepting[0];
  }

  bool CanonicalDfa::is_full() const noexcept {
    return _accepting.size() == 1 && _accepting[0];
  }

  std::strong_ordering
  CanonicalDfa::operator<=>(CanonicalDfa const& that) const {
    if (auto c = _alphabet <=> that._alphabet; c != 0) {
      return c;
    }
    if (auto c = size() <=> that.size(); c != 0) {
      return c;
    }
    if (auto c = _delta <=> that._delta; c != 0) {
      return c;
    }
    for (std::size_t q = 0; q < _accepting.size(); ++q) {
      if (_accepting[q] != that._accepting[q]) {
        return _accepting[q] ? std::strong_ordering::greater
                             : std::strong_ordering::less;
      }
    }
    return std::strong_ordering::equal;
  }

  std::string CanonicalDfa::digest() const {
    // FNV-1a over the canonical encoding.
    std::uint64_t h    = 1469598103934665603ULL;
    auto          feed = [&h](std::uint64_t x) {
      for (int i = 0; i < 4; ++i) {
        h ^= (x >> (8 * i)) & 0xff;
        h *= 1099511628211ULL;
      }
    };
    feed(_alphabet.size());
    feed(size());
    for (State q : _delta) {
      feed(q);
    }
    for (bool b : _accepting) {
      feed(b ? 1 : 0);
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::to_string(size()) + "s:" + std::string(buf).substr(0, 12);
  }

  ////////////////////////////////////////////////////////////////////////
  // Constructions
  ////////////////////////////////////////////////////////////////////////

  namespace {

    void check_same_alphabet(CanonicalDfa const& l, CanonicalDfa const& r) {
      if (l.alphabet() != r.alphabet()) {
        throw InputError("languages are over different alphabets");
      }
    }

    template <typename Combine>
    CanonicalDfa product(CanonicalDfa const& l,
                         CanonicalDfa const& r,
                         Combine&&           combine) {
      check_same_alphabet(l, r);
      std::size_t const        k = l.alphabet().size();
      std::map<std::pair<State, State>, State> id;
      std::vector<std::pair<State, State>>     states{{0, 0}};
      id[{0, 0}] = 0;
      std::vector<State> delta;
      std::vector<bool>  accept;
      for (std::size_t i = 0; i < states.size(); ++i) {
        auto [p, q] = states[i];
        accept.push_back(combine(l.accepting(p), r.accepting(q)));
        for (Letter a = 0; a < k; ++a) {
          std::pair<State, State> t{l.next(p, a), r.next(q, a)};
          auto [it, inserted] = id.emplace(t, static_cast<State>(states.size()));
          if (inserted) {
            states.push_back(t);
          }
          delta.push_back(it->second);
        }
      }
      return CanonicalDfa::from_dfa(
          l.alphabet(), states.size(), 0, std::move(delta), std::move(accept));
    }

    CanonicalDfa concatenate(CanonicalDfa const& l, CanonicalDfa const& r) {
      check_same_alphabet(l, r);
      std::size_t const k = l.alphabet().size();
      using Key           = std::pair<State, std::vector<State>>;
      std::map<Key, State> id;
      std::vector<Key>     states;
      auto                 normalize = [&](State p, std::vector<State> s) {
        if (l.accepting(p)) {
          s.push_back(0);
        }
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        return Key{p, std::move(s)};
      };
      Key start = normalize(0, {});
      id[start] = 0;
      states.push_back(start);
      std::vector<State> delta;
      std::vector<bool>  accept;
      for (std::size_t i = 0; i < states.size(); ++i) {
        Key const cur = states[i];
        bool      acc = false;
        for (State s : cur.second) {
          acc = acc || r.accepting(s);
        }
        accept.push_back(acc);
        for (Letter a = 0; a < k; ++a) {
          std::vector<State> s;
          for (State t : cur.second) {
            s.push_back(r.next(t, a));
          }
          Key nxt             = normalize(l.next(cur.first, a), std::move(s));
          auto [it, inserted] = id.emplace(nxt, static_cast<State>(states.size()));
          if (inserted) {
            states.push_back(nxt);
          }
          delta.push_back(it->second);
        }
      }
      return CanonicalDfa::from_dfa(
          l.alphabet(), states.size(), 0, std::move(delta), std::move(accept));
    }

    CanonicalDfa kleene_star(CanonicalDfa const& l) {
      std::size_t const k = l.alphabet().size();
      // State 0 is the fresh start; every other state is a set of states of
      // l, closed under restarting after an accepting state.
      std::map<std::vector<State>, State> id;
      std::vector<std::vector<State>>     states{{}};
      std::vector<State>                  delta;
      std::vector<bool>                   accept;
      for (std::size_t i = 0; i < states.size(); ++i) {
        std::vector<State> const cur = i == 0 ? std::vector<State>{0} : states[i];
        bool                     acc = i == 0;
        for (State s : cur) {
          acc = acc || l.accepting(s);
        }
        accept.push_back(acc);
        for (Letter a = 0; a < k; ++a) {
          std::vector<State> s;
          bool               restart = false;
          for (State t : cur) {
            State u = l.next(t, a);
            s.push_back(u);
            restart = restart || l.accepting(u);
          }
          if (restart) {
            s.push_back(0);
          }
          std::sort(s.begin(), s.end());
          s.erase(std::unique(s.begin(), s.end()), s.end());
          auto [it, inserted] = id.emplace(s, static_cast<State>(states.size()));
          if (inserted) {
            states.push_back(s);
          }
          delta.push_back(it->second);
        }
      }
      return CanonicalDfa::from_dfa(
          l.alphabet(), states.size(), 0, std::move(delta), std::move(accept));
    }

    CanonicalDfa literal(Alphabet const& alphabet, Letter a) {
      std::size_t const  k = alphabet.size();
      std::vector<State> delta(3 * k, 2);
      delta[a] = 1;
      return CanonicalDfa::from_dfa(
          alphabet, 3, 0, std::move(delta), {false, true, false});
    }

    CanonicalDfa epsilon(Alphabet const& alphabet) {
      std::size_t const  k = alphabet.size();
      std::vector<State> delta(2 * k, 1);
      return CanonicalDfa::from_dfa(
          alphabet, 2, 0, std::move(delta), {true, false});
    }

    CanonicalDfa with_accepting(CanonicalDfa const& l,
                                State               initial,
                                std::vector<bool>   accepting) {
      return CanonicalDfa::from_dfa(
          l.alphabet(), l.size(), initial, l.delta(), std::move(accepting));
    }

  }  // namespace

  CanonicalDfa operator|(CanonicalDfa const& l, CanonicalDfa const& r) {
    return product(l, r, [](bool x, bool y) { return x || y; });
  }

  CanonicalDfa operator&(CanonicalDfa const& l, CanonicalDfa const& r) {
    return product(l, r, [](bool x, bool y) { return x && y; });
  }

  CanonicalDfa operator^(CanonicalDfa const& l, CanonicalDfa const& r) {
    return product(l, r, [](bool x, bool y) { return x != y; });
  }

  CanonicalDfa operator~(CanonicalDfa const& l) {
    std::vector<bool> acc = l.accepting_states();
    acc.flip();
    return with_accepting(l, 0, std::move(acc));
  }

  CanonicalDfa compile(Regex const& r, Alphabet const& alphabet) {
    using K = Regex::Kind;
    switch (r.kind) {
      case K::empty:
        return CanonicalDfa::empty_language(alphabet);
      case K::epsilon:
        return epsilon(alphabet);
      case K::literal:
        if (r.letter >= alphabet.size()) {
          throw InputError("regex literal outside the alphabet");
        }
        return literal(alphabet, r.letter);
      case K::concat:
        return concatenate(compile(*r.children[0], alphabet),
                           compile(*r.children[1], alphabet));
      case K::alt:
        return compile(*r.children[0], alphabet)
               | compile(*r.children[1], alphabet);
      case K::inter:
        return compile(*r.children[0], alphabet)
               & compile(*r.children[1], alphabet);
      case K::xor_:
        return compile(*r.children[0], alphabet)
               ^ compile(*r.children[1], alphabet);
      case K::star:
        return kleene_star(compile(*r.children[0], alphabet));
      case K::complement:
        return ~compile(*r.children[0], alphabet);
    }
    throw InvariantError("unhandled regex node");
  }

  CanonicalDfa compile(std::string_view regex, Alphabet const& alphabet) {
    return compile(Regex::parse(regex, alphabet), alphabet);
  }

  AlgebraOp parse_algebra_op(std::string_view name) {
    if (name == "union") {
      return AlgebraOp::union_;
    } else if (name == "intersection") {
      return AlgebraOp::intersection;
    } else if (name == "complement") {
      return AlgebraOp::complement;
    } else if (name == "xor") {
      return AlgebraOp::xor_;
    } else if (name == "const_empty") {
      return AlgebraOp::const_empty;
    } else if (name == "const_full") {
      return AlgebraOp::const_full;
    }
    throw InputError("unknown language operation \"" + std::string(name)
                     + "\"");
  }

  std::string_view to_string(AlgebraOp op) noexcept {
    switch (op) {
      case AlgebraOp::union_:
        return "union";
      case AlgebraOp::intersection:
        return "intersection";
      case AlgebraOp::complement:
        return "complement";
      case AlgebraOp::xor_:
        return "xor";
      case AlgebraOp::const_empty:
        return "const_empty";
      case AlgebraOp::const_full:
        break;
    }
    return "const_full";
  }

  CanonicalDfa algebra_op(AlgebraOp                        op,
                          std::vector<CanonicalDfa> const& args,
                          Alphabet const&                  alphabet) {
    std::size_t const arity = op == AlgebraOp::complement ? 1
                              : (op == AlgebraOp::const_empty
                                 || op == AlgebraOp::const_full)
                                  ? 0
                                  : 2;
    if (args.size() != arity) {
      throw InputError(std::string(to_string(op)) + " expects "
                       + std::to_string(arity) + " argument(s)");
    }
    for (auto const& l : args) {
      if (l.alphabet() != alphabet) {
        throw InputError("language alphabet differs from the operation's");
      }
    }
    switch (op) {
      case AlgebraOp::union_:
        return args[0] | args[1];
      case AlgebraOp::intersection:
        return args[0] & args[1];
      case AlgebraOp::complement:
        return ~args[0];
      case AlgebraOp::xor_:
        return args[0] ^ args[1];
      case AlgebraOp::const_empty:
        return CanonicalDfa::empty_language(alphabet);
      case AlgebraOp::const_full:
        break;
    }
    return CanonicalDfa::full_language(alphabet);
  }

  CanonicalDfa algebra_op(AlgebraOp op, std::vector<CanonicalDfa> const& args) {
    if (args.empty()) {
      throw InputError("constants need an explicit alphabet");
    }
    return algebra_op(op, args, args[0].alphabet());
  }

  CanonicalDfa left_derivative(CanonicalDfa const& l, Letter a) {
    if (a >= l.alphabet().size()) {
      throw InputError("derivative letter outside the alphabet");
    }
    return with_accepting(l, l.next(0, a), l.accepting_states());
  }

  CanonicalDfa right_derivative(CanonicalDfa const& l, Letter a) {
    if (a >= l.alphabet().size()) {
      throw InputError("derivative letter outside the alphabet");
    }
    std::vector<bool> acc(l.size());
    for (State q = 0; q < l.size(); ++q) {
      acc[q] = l.accepting(l.next(q, a));
    }
    return with_accepting(l, 0, std::move(acc));
  }

  CanonicalDfa preimage(FreeMorphism const& f, CanonicalDfa const& l) {
    if (!is_word_based(f.dsig())) {
      throw InputError("language-level preimages need a SET or POS morphism; "
                       "use the monoid criterion for SLAT/Z2VEC");
    }
    if (f.codomain() != l.alphabet()) {
      throw InputError("morphism codomain differs from the language alphabet");
    }
    std::size_t const  k = f.domain().size();
    std::vector<State> delta(l.size() * k);
    for (State q = 0; q < l.size(); ++q) {
      for (Letter b = 0; b < k; ++b) {
        delta[q * k + b] = l.run(q, f.image(b).as_word());
      }
    }
    return CanonicalDfa::from_dfa(
        f.domain(), l.size(), 0, std::move(delta), l.accepting_states());
  }

  std::vector<CanonicalDfa> two_sided_derivatives(CanonicalDfa const& l) {
    std::size_t const              k = l.alphabet().size();
    std::set<std::vector<bool>>    seen{l.accepting_states()};
    std::vector<std::vector<bool>> finals{l.accepting_states()};
    for (std::size_t i = 0; i < finals.size(); ++i) {
      for (Letter a = 0; a < k; ++a) {
        std::vector<bool> next(l.size());
        for (State q = 0; q < l.size(); ++q) {
          next[q] = finals[i][l.next(q, a)];
        }
        if (seen.insert(next).second) {
          finals.push_back(std::move(next));
        }
      }
    }
    std::set<CanonicalDfa> out;
    for (State q = 0; q < l.size(); ++q) {
      for (auto const& f : finals) {
        out.insert(with_accepting(l, q, f));
      }
    }
    return {out.begin(), out.end()};
  }

  std::vector<CanonicalDfa> enumerate_canonical_dfas(Alphabet const& alphabet,
                                                     std::size_t max_states,
                                                     std::size_t limit) {
    std::size_t const         k = alphabet.size();
    std::vector<CanonicalDfa> out;
    std::size_t               inspected = 0;
    for (std::size_t n = 1; n <= max_states; ++n) {
      std::vector<State> delta(n * k, 0);
      // Slots are filled in BFS order; a target may be at most one past the
      // largest state discovered so far.
      auto recurse = [&](auto&& self, std::size_t slot, std::size_t found)
          -> void {
        if (slot == n * k) {
          if (found != n) {
            return;
          }
          for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
            if (++inspected > limit) {
              throw ResourceError("DFA enumeration exceeds "
                                  + std::to_string(limit) + " candidates");
            }
            std::vector<bool> acc(n);
            for (std::size_t q = 0; q < n; ++q) {
              acc[q] = mask >> q & 1;
            }
            auto dfa = CanonicalDfa::from_dfa(alphabet, n, 0, delta, acc);
            if (dfa.size() == n) {
              out.push_back(std::move(dfa));
            }
          }
          return;
        }
        std::size_t state = slot / k;
        if (state >= found) {
          return;
        }
        std::size_t top = std::min(found, n - 1);
        for (std::size_t t = 0; t <= top; ++t) {
          delta[slot] = static_cast<State>(t);
          self(self, slot + 1, t == found ? found + 1 : found);
        }
      };
      recurse(recurse, 0, 1);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

}  // namespace regvar
