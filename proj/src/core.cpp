//
// regvar - regular languages, finite D-monoids and their dualities
//

#include "regvar/core.hpp"

#include <algorithm>  // for sort, lexicographical_compare_three_way
#include <set>        // for set

namespace regvar {

  std::strong_ordering shortlex_compare(Word const& u, Word const& v) {
    if (u.size() != v.size()) {
      return u.size() <=> v.size();
    }
    return std::lexicographical_compare_three_way(
        u.begin(), u.end(), v.begin(), v.end());
  }

  std::vector<Word> words_up_to(std::size_t alphabet_size,
                                std::size_t max_length) {
    std::vector<Word> out{Word{}};
    std::size_t       first = 0;
    for (std::size_t len = 1; len <= max_length; ++len) {
      std::size_t last = out.size();
      for (std::size_t i = first; i < last; ++i) {
        for (Letter a = 0; a < alphabet_size; ++a) {
          Word w = out[i];
          w.push_back(a);
          out.push_back(std::move(w));
        }
      }
      first = last;
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Alphabet
  ////////////////////////////////////////////////////////////////////////

  namespace {
    bool is_reserved(char c) {
      switch (c) {
        case '0':
        case 'e':
        case '|':
        case '&':
        case '~':
        case '^':
        case '*':
        case '(':
        case ')':
        case ',':
        case '{':
        case '}':
        case '+':
        case ' ':
        case '\t':
        case '\n':
        case '\r':
          return true;
        default:
          return false;
      }
    }
  }  // namespace

  Alphabet::Alphabet(std::vector<std::string> symbols)
      : _symbols(std::move(symbols)) {
    if (_symbols.empty()) {
      throw InputError("alphabet must be non-empty");
    }
    std::set<std::string> seen;
    for (auto const& s : _symbols) {
      if (s.size() != 1 || is_reserved(s[0])
          || static_cast<unsigned char>(s[0]) < 0x21
          || static_cast<unsigned char>(s[0]) > 0x7e) {
        throw InputError("invalid alphabet symbol \"" + s
                         + "\" (symbols are single printable characters "
                           "other than 0 e | & ~ ^ * ( ) , { } +)");
      }
      if (!seen.insert(s).second) {
        throw InputError("duplicate alphabet symbol \"" + s + "\"");
      }
    }
  }

  Alphabet Alphabet::parse(std::string_view spec) {
    std::vector<std::string> symbols;
    for (char c : spec) {
      if (c == ',' || c == ' ') {
        continue;
      }
      symbols.emplace_back(1, c);
    }
    return Alphabet(std::move(symbols));
  }

  std::optional<Letter> Alphabet::find(char c) const noexcept {
    for (Letter a = 0; a < _symbols.size(); ++a) {
      if (_symbols[a][0] == c) {
        return a;
      }
    }
    return std::nullopt;
  }

  Letter Alphabet::index(std::string_view symbol) const {
    if (symbol.size() == 1) {
      if (auto a = find(symbol[0])) {
        return *a;
      }
    }
    throw InputError("symbol \"" + std::string(symbol)
                     + "\" is not in the alphabet");
  }

  Word Alphabet::parse_word(std::string_view text) const {
    Word w;
    w.reserve(text.size());
    for (char c : text) {
      auto a = find(c);
      if (!a) {
        throw InputError(std::string("letter '") + c
                         + "' is not in the alphabet");
      }
      w.push_back(*a);
    }
    return w;
  }

  std::string Alphabet::format(Word const& w) const {
    std::string out;
    out.reserve(w.size());
    for (Letter a : w) {
      out += _symbols.at(a);
    }
    return out;
  }

  std::string pretty(Alphabet const& alphabet, Word const& w) {
    return w.empty() ? std::string("ε") : alphabet.format(w);
  }

  ////////////////////////////////////////////////////////////////////////
  // Signatures
  ////////////////////////////////////////////////////////////////////////

  std::string_view to_string(DSignature d) noexcept {
    switch (d) {
      case DSignature::set:
        return "SET";
      case DSignature::pos:
        return "POS";
      case DSignature::slat:
        return "SLAT";
      case DSignature::z2vec:
        break;
    }
    return "Z2VEC";
  }

  std::string_view to_string(CSignature c) noexcept {
    switch (c) {
      case CSignature::ba:
        return "BA";
      case CSignature::dlat:
        return "DLAT";
      case CSignature::slat:
        return "SLAT_C";
      case CSignature::z2vec:
        break;
    }
    return "Z2VEC_C";
  }

  DSignature parse_dsignature(std::string_view text) {
    if (text == "SET") {
      return DSignature::set;
    } else if (text == "POS") {
      return DSignature::pos;
    } else if (text == "SLAT") {
      return DSignature::slat;
    } else if (text == "Z2VEC") {
      return DSignature::z2vec;
    }
    throw InputError("unknown D-signature \"" + std::string(text)
                     + "\" (expected SET, POS, SLAT or Z2VEC)");
  }

  CSignature parse_csignature(std::string_view text) {
    if (text == "BA") {
      return CSignature::ba;
    } else if (text == "DLAT") {
      return CSignature::dlat;
    } else if (text == "SLAT_C" || text == "SLAT") {
      return CSignature::slat;
    } else if (text == "Z2VEC_C" || text == "Z2VEC") {
      return CSignature::z2vec;
    }
    throw InputError("unknown C-signature \"" + std::string(text)
                     + "\" (expected BA, DLAT, SLAT_C or Z2VEC_C)");
  }

  ////////////////////////////////////////////////////////////////////////
  // FreeDElement
  ////////////////////////////////////////////////////////////////////////

  FreeDElement FreeDElement::word(DSignature dsig, Word w) {
    FreeDElement x;
    x._dsig  = dsig;
    x._words = {std::move(w)};
    return x;
  }

  FreeDElement FreeDElement::combination(DSignature dsig,
                                         std::vector<Word> words) {
    if (is_word_based(dsig)) {
      if (words.size() != 1) {
        throw InputError(std::string("a ") + std::string(regvar::to_string(dsig))
                         + " payload must be exactly one word");
      }
      return word(dsig, std::move(words[0]));
    }
    std::sort(words.begin(), words.end(), shortlex_less);
    std::vector<Word> normal;
    for (std::size_t i = 0; i < words.size();) {
      std::size_t j = i;
      while (j < words.size() && words[j] == words[i]) {
        ++j;
      }
      if (dsig == DSignature::slat || (j - i) % 2 == 1) {
        normal.push_back(words[i]);
      }
      i = j;
    }
    FreeDElement x;
    x._dsig  = dsig;
    x._words = std::move(normal);
    return x;
  }

  FreeDElement FreeDElement::zero(DSignature dsig) {
    if (is_word_based(dsig)) {
      throw InputError("SET and POS free monoids have no zero");
    }
    FreeDElement x;
    x._dsig = dsig;
    x._words.clear();
    return x;
  }

  Word const& FreeDElement::as_word() const {
    if (!is_word_based(_dsig)) {
      throw InputError("payload is not a single word");
    }
    return _words[0];
  }

  std::size_t FreeDElement::length() const noexcept {
    std::size_t n = 0;
    for (auto const& w : _words) {
      n = std::max(n, w.size());
    }
    return n;
  }

  FreeDElement FreeDElement::operator*(FreeDElement const& that) const {
    std::vector<Word> out;
    out.reserve(_words.size() * that._words.size());
    for (auto const& u : _words) {
      for (auto const& v : that._words) {
        Word w = u;
        w.insert(w.end(), v.begin(), v.end());
        out.push_back(std::move(w));
      }
    }
    return combination(_dsig, std::move(out));
  }

  FreeDElement FreeDElement::operator+(FreeDElement const& that) const {
    if (is_word_based(_dsig)) {
      throw InputError("SET and POS free monoids have no addition");
    }
    std::vector<Word> out = _words;
    out.insert(out.end(), that._words.begin(), that._words.end());
    return combination(_dsig, std::move(out));
  }

  std::strong_ordering
  FreeDElement::operator<=>(FreeDElement const& that) const {
    if (_dsig != that._dsig) {
      return _dsig <=> that._dsig;
    }
    // Compare from the largest word down; the first difference decides.
    auto i = _words.size();
    auto j = that._words.size();
    while (i > 0 && j > 0) {
      auto c = shortlex_compare(_words[i - 1], that._words[j - 1]);
      if (c != 0) {
        return c;
      }
      --i;
      --j;
    }
    return i <=> j;
  }

  std::string FreeDElement::to_string(Alphabet const& alphabet) const {
    if (is_word_based(_dsig)) {
      return pretty(alphabet, _words[0]);
    }
    if (_words.empty()) {
      return _dsig == DSignature::slat ? "{}" : "0";
    }
    std::string out = _dsig == DSignature::slat ? "{" : "";
    for (std::size_t i = 0; i < _words.size(); ++i) {
      if (i > 0) {
        out += _dsig == DSignature::slat ? ", " : " + ";
      }
      out += pretty(alphabet, _words[i]);
    }
    if (_dsig == DSignature::slat) {
      out += "}";
    }
    return out;
  }

  std::vector<FreeDElement> free_elements_up_to(DSignature  dsig,
                                                std::size_t alphabet_size,
                                                std::size_t max_length,
                                                std::size_t limit) {
    auto                      words = words_up_to(alphabet_size, max_length);
    std::vector<FreeDElement> out;
    if (is_word_based(dsig)) {
      for (auto& w : words) {
        out.push_back(FreeDElement::word(dsig, std::move(w)));
      }
      return out;
    }
    if (words.size() >= 63 || (std::size_t(1) << words.size()) > limit) {
      throw ResourceError("too many word sets of length <= "
                          + std::to_string(max_length));
    }
    std::size_t const count = std::size_t(1) << words.size();
    for (std::size_t mask = 0; mask < count; ++mask) {
      std::vector<Word> ws;
      for (std::size_t i = 0; i < words.size(); ++i) {
        if (mask >> i & 1) {
          ws.push_back(words[i]);
        }
      }
      out.push_back(FreeDElement::combination(dsig, std::move(ws)));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // FreeMorphism
  ////////////////////////////////////////////////////////////////////////

  FreeMorphism::FreeMorphism(Alphabet                  domain,
                             Alphabet                  codomain,
                             DSignature                dsig,
                             std::vector<FreeDElement> images)
      : _domain(std::move(domain)),
        _codomain(std::move(codomain)),
        _dsig(dsig),
        _images(std::move(images)) {
    if (_images.size() != _domain.size()) {
      throw InputError("a free morphism needs one image per domain letter");
    }
    for (auto const& x : _images) {
      if (x.dsig() != _dsig) {
        throw InputError("image signature differs from morphism signature");
      }
      for (auto const& w : x.words()) {
        for (Letter b : w) {
          if (b >= _codomain.size()) {
            throw InputError("image letter outside the codomain alphabet");
          }
        }
      }
    }
  }

  FreeMorphism FreeMorphism::identity(Alphabet const& alphabet,
                                      DSignature      dsig) {
    std::vector<FreeDElement> images;
    for (Letter a = 0; a < alphabet.size(); ++a) {
      images.push_back(FreeDElement::word(dsig, {a}));
    }
    return FreeMorphism(alphabet, alphabet, dsig, std::move(images));
  }

  FreeDElement FreeMorphism::apply(Word const& w) const {
    FreeDElement out = FreeDElement::one(_dsig);
    for (Letter a : w) {
      out = out * _images.at(a);
    }
    return out;
  }

  FreeDElement FreeMorphism::apply(FreeDElement const& x) const {
    if (is_word_based(_dsig)) {
      return apply(x.as_word());
    }
    FreeDElement out = FreeDElement::zero(_dsig);
    for (auto const& w : x.words()) {
      out = out + apply(w);
    }
    return out;
  }

  std::size_t FreeMorphism::payload_length() const noexcept {
    std::size_t n = 0;
    for (auto const& x : _images) {
      n = std::max(n, x.length());
    }
    return n;
  }

  std::string FreeMorphism::to_string() const {
    std::string out;
    for (Letter a = 0; a < _domain.size(); ++a) {
      if (a > 0) {
        out += ", ";
      }
      out += _domain.symbol(a) + "↦" + _images[a].to_string(_codomain);
    }
    return out;
  }

  FreeMorphism compose(FreeMorphism const& f, FreeMorphism const& g) {
    if (f.codomain() != g.domain() || f.dsig() != g.dsig()) {
      throw InputError("morphisms are not composable");
    }
    std::vector<FreeDElement> images;
    for (auto const& x : f.images()) {
      images.push_back(g.apply(x));
    }
    return FreeMorphism(f.domain(), g.codomain(), f.dsig(), std::move(images));
  }

  std::vector<FreeMorphism> morphisms_up_to(Alphabet const& domain,
                                            Alphabet const& codomain,
                                            DSignature      dsig,
                                            std::size_t     max_length,
                                            std::size_t     limit) {
    auto const payloads
        = free_elements_up_to(dsig, codomain.size(), max_length, limit);
    std::size_t total = 1;
    for (std::size_t i = 0; i < domain.size(); ++i) {
      total *= payloads.size();
      if (total > limit) {
        throw ResourceError("too many morphisms with payload length <= "
                            + std::to_string(max_length));
      }
    }
    std::vector<FreeMorphism> out;
    out.reserve(total);
    std::vector<std::size_t> choice(domain.size(), 0);
    for (std::size_t n = 0; n < total; ++n) {
      std::vector<FreeDElement> images;
      for (std::size_t i = 0; i < domain.size(); ++i) {
        images.push_back(payloads[choice[i]]);
      }
      out.emplace_back(domain, codomain, dsig, std::move(images));
      for (std::size_t i = domain.size(); i-- > 0;) {
        if (++choice[i] < payloads.size()) {
          break;
        }
        choice[i] = 0;
      }
    }
    return out;
  }

}  // namespace regvar
