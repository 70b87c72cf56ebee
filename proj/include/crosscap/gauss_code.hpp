#pragma once

// Gauss codes for connected alternating knot/link diagrams, plus DT-code
// conversion. A Gauss code is a list of cyclic components; every crossing
// label 1..c appears exactly twice in total. Codes are unsigned: a diagram,
// its mirror, and its crossing-reversal share one code.

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace crosscap {

using Label = int;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ValidityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GaussCode {
  std::vector<std::vector<Label>> components;

  bool operator==(const GaussCode&) const = default;
};

// c = half the total word length; every label appears exactly twice.
inline int crossing_count(const GaussCode& g) {
  std::size_t total = 0;
  for (const auto& comp : g.components) total += comp.size();
  return static_cast<int>(total / 2);
}

// Throws ValidityError unless each label that appears does so exactly twice
// and every component is non-empty.
inline void validate(const GaussCode& g) {
  if (g.components.empty()) throw ValidityError("Gauss code has no components");
  std::unordered_map<Label, int> counts;
  for (const auto& comp : g.components) {
    if (comp.empty()) throw ValidityError("Gauss code has an empty component");
    for (Label x : comp) {
      if (x < 1) throw ValidityError("crossing labels must be positive");
      ++counts[x];
    }
  }
  for (const auto& [label, n] : counts) {
    if (n != 2)
      throw ValidityError("label " + std::to_string(label) + " occurs " +
                          std::to_string(n) + " times, expected 2");
  }
}

namespace detail {

class TextCursor {
 public:
  explicit TextCursor(const std::string& text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c))
      throw ParseError(std::string("expected '") + c + "' at offset " + std::to_string(pos_));
  }
  bool at_end() {
    skip_ws();
    return pos_ == text_.size();
  }
  Label integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError("expected integer at offset " + std::to_string(start));
    long v = std::stol(text_.substr(start, pos_ - start));
    if (v < 1 || v > 1'000'000) throw ParseError("crossing label out of range");
    return static_cast<Label>(v);
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// Grammar: code := '[' comp (',' comp)* ']' ; comp := '[' int (',' int)* ']'.
// Whitespace is permitted between tokens. The result is validated.
inline GaussCode parse_gauss(const std::string& text) {
  detail::TextCursor cur(text);
  GaussCode g;
  cur.expect('[');
  do {
    cur.expect('[');
    std::vector<Label> comp;
    do {
      comp.push_back(cur.integer());
    } while (cur.eat(','));
    cur.expect(']');
    g.components.push_back(std::move(comp));
  } while (cur.eat(','));
  cur.expect(']');
  if (!cur.at_end()) throw ParseError("trailing characters after Gauss code");
  validate(g);
  return g;
}

// Whitespace-free, bit-exact inverse of parse_gauss.
inline std::string serialize_gauss(const GaussCode& g) {
  std::string out = "[";
  for (std::size_t i = 0; i < g.components.size(); ++i) {
    if (i) out += ',';
    out += '[';
    for (std::size_t j = 0; j < g.components[i].size(); ++j) {
      if (j) out += ',';
      out += std::to_string(g.components[i][j]);
    }
    out += ']';
  }
  out += ']';
  return out;
}

// Renames labels to 1..c so that first appearances, reading components in
// order, occur in increasing order.
inline GaussCode canonical_relabel(const GaussCode& g) {
  std::unordered_map<Label, Label> rename;
  Label next = 1;
  GaussCode out;
  out.components.reserve(g.components.size());
  for (const auto& comp : g.components) {
    auto& dst = out.components.emplace_back();
    dst.reserve(comp.size());
    for (Label x : comp) {
      auto [it, inserted] = rename.try_emplace(x, next);
      if (inserted) ++next;
      dst.push_back(it->second);
    }
  }
  return out;
}

struct DTCode {
  std::vector<int> entries;  // even integers, signs ignored
};

// Space- or comma-separated even integers; signs discarded.
inline DTCode parse_dt(const std::string& text) {
  DTCode d;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::size_t used = 0;
    long v;
    try {
      v = std::stol(token, &used);
    } catch (const std::exception&) {
      throw ParseError("bad DT entry '" + token + "'");
    }
    if (used != token.size()) throw ParseError("bad DT entry '" + token + "'");
    d.entries.push_back(static_cast<int>(v));
    token.clear();
  };
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',')
      flush();
    else
      token += ch;
  }
  flush();
  if (d.entries.empty()) throw ParseError("empty DT code");
  return d;
}

// Expands the DT pairing (odd position 2k-1 with position |entry_k|) into a
// double-occurrence word and canonically relabels it. Knots only.
inline GaussCode dt_to_gauss(const DTCode& d) {
  const int c = static_cast<int>(d.entries.size());
  if (c < 2) throw ValidityError("DT code must have at least 2 entries");
  std::vector<Label> word(2 * c, 0);
  std::vector<bool> seen(2 * c + 1, false);
  for (int k = 0; k < c; ++k) {
    int e = std::abs(d.entries[k]);
    if (e < 2 || e > 2 * c || e % 2 != 0)
      throw ValidityError("DT entry " + std::to_string(d.entries[k]) + " out of range");
    if (seen[e]) throw ValidityError("DT entry " + std::to_string(e) + " repeated");
    seen[e] = true;
    int odd_pos = 2 * k + 1;            // 1-based position
    word[odd_pos - 1] = k + 1;
    word[e - 1] = k + 1;
  }
  GaussCode g{{word}};
  validate(g);
  return canonical_relabel(g);
}

}  // namespace crosscap
