#include "cli/cli.hpp"

#include "outercomm/error.hpp"
#include "outercomm/limits.hpp"

#include <cctype>
#include <charconv>

namespace outercomm::cli {

namespace {

class GroupLiteralParser {
 public:
  explicit GroupLiteralParser(std::string_view text) : text_(text) {}

  FgAbelianGroup parse() {
    skip_space();
    if (at_end()) throw ParseError("empty group literal", pos_);
    term();
    for (skip_space(); !at_end(); skip_space()) {
      if (peek() != 'x' && peek() != '+') throw ParseError("expected 'x' or '+' between factors", pos_);
      ++pos_;
      term();
    }
    return normalize(rank_, moduli_);
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  Integer number(const char* what) {
    skip_space();
    const std::size_t start = pos_;
    std::string digits;
    for (; !at_end(); ++pos_) {
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        digits.push_back(peek());
      } else if (!std::isspace(static_cast<unsigned char>(peek()))) {
        break;
      }
    }
    if (digits.empty()) throw ParseError(std::string("expected ") + what, start);
    return Integer(digits);
  }

  void term() {
    skip_space();
    if (at_end() || peek() != 'Z') throw ParseError("expected 'Z'", pos_);
    ++pos_;
    skip_space();
    if (at_end() || peek() == 'x' || peek() == '+') {
      rank_ += 1;
      return;
    }
    if (peek() == '^') {
      ++pos_;
      rank_ += number("free rank after 'Z^'");
      return;
    }
    if (peek() == '_') ++pos_;
    const std::size_t at = pos_;
    const Integer modulus = number("cyclic order");
    if (modulus == 0) throw ParseError("cyclic order must be positive", at);
    Integer copies = 1;
    skip_space();
    if (!at_end() && peek() == '^') {
      ++pos_;
      copies = number("repeat count after '^'");
    }
    require_within_cap(CapKind::GroupElements, Integer(moduli_.size()) + copies);
    for (Integer c = 0; c < copies; ++c) moduli_.push_back(modulus);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Count rank_ = 0;
  std::vector<Integer> moduli_;
};

std::uint32_t parse_u32(std::string_view text, std::string_view what) {
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw ParseError("invalid " + std::string(what) + " '" + std::string(text) + "'", 0);
  }
  return value;
}

std::pair<std::uint32_t, std::uint32_t> parse_pair(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) throw ParseError("expected 'c1,c2' in '" + std::string(text) + "'", 0);
  return {parse_u32(text.substr(0, comma), "c1"), parse_u32(text.substr(comma + 1), "c2")};
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

FgAbelianGroup parse_group(std::string_view text) { return GroupLiteralParser(text).parse(); }

VarietySelector parse_selector(std::string_view text) {
  text = trim(text);
  if (text == "baer") return BaerSelector{};
  if (text == "s2") return MetabelianSelector{};
  if (text.starts_with("nc:")) {
    const std::uint32_t c = parse_u32(text.substr(3), "nilpotency class");
    if (c == 0) throw ParseError("nilpotency class must be >= 1", 3);
    return NilpotentSelector{c};
  }
  if (text.starts_with("outer:")) {
    const auto [c1, c2] = parse_pair(text.substr(6));
    return selector_for(VarietyParams(c1, c2));
  }
  throw ParseError("unknown variety '" + std::string(text) + "' (expected baer, nc:C, outer:C1,C2 or s2)", 0);
}

std::vector<VarietyParams> parse_params_list(std::string_view text) {
  std::vector<VarietyParams> out;
  while (!text.empty()) {
    const auto semi = text.find(';');
    const std::string_view item = trim(text.substr(0, semi));
    if (!item.empty()) {
      const auto [c1, c2] = parse_pair(item);
      out.emplace_back(c1, c2);
    }
    if (semi == std::string_view::npos) break;
    text.remove_prefix(semi + 1);
  }
  if (out.empty()) throw ParseError("empty parameter list", 0);
  return out;
}

}  // namespace outercomm::cli
