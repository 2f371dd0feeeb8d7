#include "polyaut/words.hpp"

#include <cctype>

#include <nlohmann/json.hpp>

namespace polyaut {

namespace {

class WordParser {
 public:
  WordParser(const std::string& text, int rank) : text_(text), rank_(rank) {}

  FMElement parse() {
    FMElement e = parse_word();
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError("unexpected character '" + std::string(1, text_[pos_]) +
                       "' at position " + std::to_string(pos_));
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool at_atom_start() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return c == '[' || c == '(' || is_generator_char(c);
  }

  bool is_generator_char(char c) const {
    char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return lower >= 'a' && lower < 'a' + rank_;
  }

  FMElement parse_word() {
    FMElement acc = FMElement::identity(rank_);
    while (at_atom_start()) acc = acc * parse_factor();
    return acc;
  }

  FMElement parse_factor() {
    FMElement atom = parse_atom();
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      return atom.pow(parse_int());
    }
    return atom;
  }

  FMElement parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("expected an atom, found end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      FMElement inner = parse_word();
      expect(')');
      return inner;
    }
    if (c == '[') {
      ++pos_;
      FMElement u = parse_word();
      expect(',');
      FMElement v = parse_word();
      expect(']');
      return fm_commutator(u, v);
    }
    if (is_generator_char(c)) {
      ++pos_;
      char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      FMElement g = FMElement::generator(rank_, lower - 'a');
      return std::isupper(static_cast<unsigned char>(c)) ? g.inverse() : g;
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "' at position " +
                     std::to_string(pos_));
  }

  long long parse_int() {
    skip_ws();
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("expected an integer exponent at position " + std::to_string(pos_));
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1000000) throw ParseError("exponent too large");
      ++pos_;
    }
    return neg ? -v : v;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw ParseError(std::string("expected '") + c + "' at position " +
                       std::to_string(pos_));
    ++pos_;
  }

  const std::string& text_;
  int rank_;
  std::size_t pos_ = 0;
};

nlohmann::ordered_json poly_to_json(const LaurentPoly& p) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [e, c] : p.terms()) {
    nlohmann::ordered_json exps = nlohmann::ordered_json::array();
    for (int i = 0; i < p.rank(); ++i) exps.push_back(e[i]);
    terms.push_back({exps, c.str()});
  }
  return terms;
}

LaurentPoly poly_from_json(const nlohmann::json& j, int rank) {
  LaurentPoly acc(rank);
  for (const auto& term : j) {
    Exps e{0, 0, 0};
    for (int i = 0; i < rank; ++i) e[i] = term.at(0).at(i).get<int>();
    acc = acc + LaurentPoly::monomial(rank, e, Coeff(term.at(1).get<std::string>()));
  }
  return acc;
}

}  // namespace

FMElement parse_word(const std::string& text, int rank) {
  return WordParser(text, rank).parse();
}

std::string fm_to_json(const FMElement& e) {
  nlohmann::ordered_json j;
  j["rank"] = e.rank();
  nlohmann::ordered_json t = nlohmann::ordered_json::array();
  for (int i = 0; i < e.rank(); ++i) t.push_back(e.tvec()[i]);
  j["t"] = t;
  nlohmann::ordered_json fringe = nlohmann::ordered_json::array();
  for (int i = 0; i < e.rank(); ++i) fringe.push_back(poly_to_json(e.fringe(i)));
  j["fringe"] = fringe;
  return j.dump();
}

FMElement fm_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid FM element JSON: ") + e.what());
  }
  const int rank = j.at("rank").get<int>();
  if (rank != 2 && rank != 3) throw ParseError("FM element rank must be 2 or 3");
  std::array<int, 3> t{0, 0, 0};
  for (int i = 0; i < rank; ++i) t[i] = j.at("t").at(i).get<int>();
  std::vector<LaurentPoly> fringe;
  for (int i = 0; i < rank; ++i) fringe.push_back(poly_from_json(j.at("fringe").at(i), rank));
  try {
    return FMElement::from_parts(rank, t, std::move(fringe));
  } catch (const Error& e) {
    throw ParseError(std::string("invalid FM element JSON: ") + e.what());
  }
}

}  // namespace polyaut
