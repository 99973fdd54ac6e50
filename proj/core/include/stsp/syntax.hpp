#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "stsp/error.hpp"
#include "stsp/ring.hpp"

namespace stsp {

/// Hand-rolled scanner shared by the vector, word and generator parsers.
/// Positions in ParseError are byte offsets into the original text.
class Cursor {
 public:
  explicit Cursor(std::string_view text, std::size_t base = 0) : text_(text), base_(base) {}

  std::size_t position() const noexcept { return base_ + pos_; }
  std::string_view rest() const noexcept { return text_.substr(pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  bool eat(std::string_view s) {
    skip_ws();
    if (text_.substr(pos_, s.size()) != s) return false;
    pos_ += s.size();
    return true;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  void expect(std::string_view s) {
    if (!eat(s)) fail("expected '" + std::string(s) + "'");
  }

  /// Optionally signed decimal literal.
  std::string_view integer_token() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected an integer");
    }
    return text_.substr(start, pos_ - start);
  }

  int index() {
    std::size_t at = position();
    std::string tok(integer_token());
    try {
      return std::stoi(tok);
    } catch (const std::exception&) {
      throw ParseError("bad index '" + tok + "'", at);
    }
  }

  Scalar scalar(const Ring& ring) {
    std::size_t at = position();
    std::string_view tok = integer_token();
    try {
      return ring.parse_scalar(tok);
    } catch (const ParseError&) {
      throw ParseError("bad scalar '" + std::string(tok) + "'", at);
    }
  }

  /// Everything up to (not including) the first top-level occurrence of one of
  /// `stops`, tracking bracket depth.
  std::string_view until_top_level(std::string_view stops) {
    skip_ws();
    std::size_t start = pos_;
    int depth = 0;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (depth == 0 && stops.find(c) != std::string_view::npos) break;
      if (c == '(' || c == '[') ++depth;
      if (c == ')' || c == ']') --depth;
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, position()); }

 private:
  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

}  // namespace stsp
