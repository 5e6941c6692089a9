#include "vlink/io.hpp"

#include <cctype>
#include <sstream>

namespace vlink {

namespace {

struct Token {
  enum class Kind { Passage, Mark, LoopOpen, LoopClose, LoopEmpty } kind;
  Passage passage{};
  int eps = 0;
};

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> words;
  std::istringstream in(line);
  std::string w;
  while (in >> w) words.push_back(w);
  return words;
}

Token lex(const std::string& w, int line_no) {
  if (w == "(") return {Token::Kind::LoopOpen};
  if (w == ")") return {Token::Kind::LoopClose};
  if (w == "()") return {Token::Kind::LoopEmpty};
  if (w == "!+") return {Token::Kind::Mark, {}, +1};
  if (w == "!-") return {Token::Kind::Mark, {}, -1};
  if (w.size() >= 3 && (w[0] == 'O' || w[0] == 'U')) {
    char sign = w.back();
    std::string digits = w.substr(1, w.size() - 2);
    bool numeric = !digits.empty();
    for (char c : digits)
      if (!std::isdigit(static_cast<unsigned char>(c))) numeric = false;
    if (numeric && (sign == '+' || sign == '-')) {
      long id = std::stol(digits);
      if (id < 1 || id > 1000000000)
        throw ParseError(line_no, "crossing id out of range in '" + w + "'");
      return {Token::Kind::Passage,
              {static_cast<int>(id), w[0] == 'O' ? Role::Over : Role::Under},
              sign == '+' ? +1 : -1};
    }
  }
  throw ParseError(line_no, "bad token '" + w + "'");
}

}  // namespace

Parsed parse_diagram(const std::string& text) {
  Parsed result;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::vector<std::string> words = split_ws(line);
    if (words.empty()) continue;

    int comp = static_cast<int>(result.diagram.components.size());
    std::vector<Token> tokens;
    for (const auto& w : words) tokens.push_back(lex(w, line_no));

    if (tokens.front().kind == Token::Kind::LoopEmpty ||
        tokens.front().kind == Token::Kind::LoopOpen) {
      // Free loop: "()" alone, or "( marks... )".
      bool bare = tokens.front().kind == Token::Kind::LoopEmpty;
      if (bare && tokens.size() != 1)
        throw ParseError(line_no, "extra tokens after '()'");
      if (!bare) {
        if (tokens.back().kind != Token::Kind::LoopClose)
          throw ParseError(line_no, "unclosed free loop");
        int ordinal = 0;
        for (std::size_t i = 1; i + 1 < tokens.size(); ++i) {
          if (tokens[i].kind != Token::Kind::Mark)
            throw ParseError(line_no, "free loops may carry only cut marks");
          result.cuts.marks.push_back({{comp, 0}, ordinal++, tokens[i].eps});
        }
      }
      result.diagram.components.emplace_back();
      continue;
    }

    std::vector<Passage> passages;
    std::vector<std::pair<int, int>> pending;  // (gap, eps); gap -1 = before first passage
    for (const Token& t : tokens) {
      switch (t.kind) {
        case Token::Kind::Passage: {
          passages.push_back(t.passage);
          int id = t.passage.crossing;
          auto [it, fresh] = result.diagram.signs.emplace(id, t.eps);
          if (!fresh && it->second != t.eps)
            throw ParseError(line_no, "conflicting signs for crossing " +
                                          std::to_string(id));
          break;
        }
        case Token::Kind::Mark:
          pending.push_back({static_cast<int>(passages.size()) - 1, t.eps});
          break;
        default:
          throw ParseError(line_no, "free loop syntax inside a component line");
      }
    }
    if (passages.empty())
      throw ParseError(line_no, "cut marks need a component; use '( ... )' for a free loop");

    // Marks written before the first passage sit on the wrap gap, after the
    // marks written at the line's tail.
    int last = static_cast<int>(passages.size()) - 1;
    std::map<int, std::vector<int>> by_gap;
    for (auto [gap, eps] : pending)
      if (gap >= 0) by_gap[gap].push_back(eps);
    for (auto [gap, eps] : pending)
      if (gap < 0) by_gap[last].push_back(eps);
    for (const auto& [gap, epses] : by_gap)
      for (int i = 0; i < static_cast<int>(epses.size()); ++i)
        result.cuts.marks.push_back({{comp, gap}, i, epses[i]});

    result.diagram.components.push_back(std::move(passages));
  }

  if (auto bad = validate(result.diagram); !bad.empty())
    throw ParseError(line_no, to_string(bad.front()));
  normalize(result.cuts);
  return result;
}

std::string serialize(const Diagram& d, const CutSystem& p) {
  check_located(d, p);
  auto marks = marks_by_arc(p);
  std::ostringstream out;
  for (int c = 0; c < static_cast<int>(d.components.size()); ++c) {
    const auto& comp = d.components[c];
    std::vector<std::string> words;
    if (comp.empty()) {
      auto it = marks.find(SemiArcId{c, 0});
      if (it == marks.end()) {
        words.push_back("()");
      } else {
        words.push_back("(");
        for (int eps : it->second) words.push_back(eps > 0 ? "!+" : "!-");
        words.push_back(")");
      }
    } else {
      for (int i = 0; i < static_cast<int>(comp.size()); ++i) {
        const Passage& pass = comp[i];
        words.push_back(std::string(pass.role == Role::Over ? "O" : "U") +
                        std::to_string(pass.crossing) +
                        (d.signs.at(pass.crossing) > 0 ? "+" : "-"));
        if (auto it = marks.find(SemiArcId{c, i}); it != marks.end())
          for (int eps : it->second) words.push_back(eps > 0 ? "!+" : "!-");
      }
    }
    for (std::size_t i = 0; i < words.size(); ++i)
      out << (i ? " " : "") << words[i];
    out << "\n";
  }
  return out.str();
}

}  // namespace vlink
