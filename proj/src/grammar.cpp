#include "ptlab/grammar.hpp"

#include <cctype>
#include <charconv>

#include "ptlab/errors.hpp"

namespace ptlab::grammar {

namespace {

class Cursor {
 public:
  Cursor(const std::string& text, std::size_t offset = 0) : text_(text), pos_(0), offset_(offset) {}

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  std::size_t column() const { return offset_ + pos_; }
  void skip_spaces() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c, const std::string& what) {
    if (!accept(c)) fail("expected " + what);
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, column()); }

  long integer(const std::string& what) {
    const std::size_t start = pos_;
    if (peek() == '+' || peek() == '-') ++pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    long value = 0;
    const char* first = text_.data() + start + (text_[start] == '+' ? 1 : 0);
    const auto [ptr, ec] = std::from_chars(first, text_.data() + pos_, value);
    if (ec != std::errc() || ptr != text_.data() + pos_ || pos_ == start) {
      pos_ = start;
      fail("expected " + what);
    }
    return value;
  }

  std::size_t positive(const std::string& what) {
    const std::size_t start = pos_;
    const long v = integer(what);
    if (v <= 0) {
      pos_ = start;
      fail(what + " must be positive");
    }
    return static_cast<std::size_t>(v);
  }

  double decimal(const std::string& what) {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.') ++pos_;
    double value = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc() || ptr != text_.data() + pos_ || pos_ == start) {
      pos_ = start;
      fail("expected " + what);
    }
    return value;
  }

  std::string identifier() {
    const std::size_t start = pos_;
    if (!(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'))
      fail("expected a matrix label");
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    return text_.substr(start, pos_ - start);
  }

 private:
  const std::string& text_;
  std::size_t pos_;
  std::size_t offset_;
};

perms::EntryPermutation perm_at(Cursor& c, std::size_t n) {
  const std::size_t start = c.column();
  if (c.accept('I')) return perms::EntryPermutation::identity(n);
  if (c.accept('T')) return perms::EntryPermutation::full_transpose(n);
  if (!c.accept('G')) c.fail("expected a permutation I, T or G(theta,b,d)");
  c.expect('(', "'(' after G");
  c.skip_spaces();
  const std::size_t theta_col = c.column();
  const long theta = c.integer("theta");
  if (theta != 1 && theta != -1) throw ParseError("theta must be 1 or -1", theta_col);
  c.skip_spaces();
  c.expect(',', "','");
  c.skip_spaces();
  const std::size_t b = c.positive("b");
  c.skip_spaces();
  c.expect(',', "','");
  c.skip_spaces();
  const std::size_t d = c.positive("d");
  c.skip_spaces();
  c.expect(')', "')'");
  if (b * d != n)
    throw ParseError("G(" + std::to_string(theta) + "," + std::to_string(b) + "," +
                         std::to_string(d) + ") acts on " + std::to_string(b * d) +
                         "x" + std::to_string(b * d) + " matrices but N = " + std::to_string(n),
                     start);
  return perms::EntryPermutation::partial_transpose(
      perms::BlockShape(b, d), theta == 1 ? perms::Side::Right : perms::Side::Left);
}

}  // namespace

perms::EntryPermutation parse_perm(const std::string& text, std::size_t n) {
  Cursor c(text);
  c.skip_spaces();
  auto p = perm_at(c, n);
  c.skip_spaces();
  if (!c.done()) c.fail("unexpected trailing text");
  return p;
}

moments::Word parse_word(const std::string& text, std::size_t n) {
  if (n == 0) throw DomainError("N must be positive");
  Cursor c(text);
  std::vector<moments::Letter> letters;
  c.skip_spaces();
  while (!c.done()) {
    moments::Letter letter{"", perms::EntryPermutation::identity(n), ncpart::Sign::One};
    letter.label = c.identifier();
    bool starred = c.accept('\'');
    c.expect(':', "':' after the label");
    letter.perm = perm_at(c, n);
    if (c.peek() == '\'') {
      if (starred) c.fail("the adjoint mark appears twice");
      c.accept('\'');
      starred = true;
    }
    if (starred) letter.exponent = ncpart::Sign::Star;
    letters.push_back(std::move(letter));
    if (!c.done() && !std::isspace(static_cast<unsigned char>(c.peek())))
      c.fail("letters must be separated by spaces");
    c.skip_spaces();
  }
  if (letters.empty()) throw ParseError("empty word", 0);
  return moments::Word(std::move(letters), n);
}

moments::Pattern parse_pattern(const std::string& text) {
  moments::Pattern out;
  if (text.find_first_not_of("1* ") == std::string::npos) {
    for (auto s : ncpart::parse_signs(text)) out.push_back({"x", s});
    if (out.empty()) throw ParseError("empty pattern", 0);
    return out;
  }
  const bool spaced = text.find(' ') != std::string::npos;
  Cursor c(text);
  c.skip_spaces();
  while (!c.done()) {
    std::string label;
    if (spaced) {
      label = c.identifier();
    } else {
      if (!std::isalpha(static_cast<unsigned char>(c.peek()))) c.fail("expected a label letter");
      label = std::string(1, c.peek());
      c.accept(c.peek());
    }
    const bool star = c.accept('*') || c.accept('\'');
    out.push_back({label, star ? ncpart::Sign::Star : ncpart::Sign::One});
    if (spaced && !c.done() && !std::isspace(static_cast<unsigned char>(c.peek())))
      c.fail("pattern letters must be separated by spaces");
    c.skip_spaces();
  }
  if (out.empty()) throw ParseError("empty pattern", 0);
  return out;
}

namespace {

freeness::SizeExpr size_at(Cursor& c) {
  if (c.accept('N')) {
    if (c.accept('/')) return freeness::SizeExpr::divide(c.positive("divisor k in N/k"));
    if (c.accept('^')) {
      const std::size_t col = c.column();
      double alpha;
      if (c.accept('(')) {
        const double p = static_cast<double>(c.positive("numerator"));
        c.expect('/', "'/'");
        const double q = static_cast<double>(c.positive("denominator"));
        c.expect(')', "')'");
        alpha = p / q;
      } else {
        alpha = c.decimal("exponent");
      }
      if (alpha > 1) throw ParseError("exponent must lie in [0, 1]", col);
      return freeness::SizeExpr::power(alpha);
    }
    return freeness::SizeExpr::divide(1);
  }
  if (c.accept('{')) {
    std::map<std::size_t, std::size_t> table;
    do {
      c.skip_spaces();
      const std::size_t n = c.positive("N in the size table");
      c.expect(':', "':'");
      table[n] = c.positive("table value");
      c.skip_spaces();
    } while (c.accept(';'));
    c.expect('}', "'}'");
    return freeness::SizeExpr::table(std::move(table));
  }
  return freeness::SizeExpr::constant(c.positive("size"));
}

}  // namespace

freeness::SizeExpr parse_size(const std::string& text) {
  Cursor c(text);
  c.skip_spaces();
  auto e = size_at(c);
  c.skip_spaces();
  if (!c.done()) c.fail("unexpected trailing text");
  return e;
}

freeness::TransposeSpec parse_transpose_spec(const std::string& text) {
  Cursor c(text);
  freeness::TransposeSpec spec;
  bool has_t = false, has_b = false, has_d = false;
  c.skip_spaces();
  do {
    c.skip_spaces();
    const std::size_t key_col = c.column();
    const std::string key = c.identifier();
    c.skip_spaces();
    c.expect('=', "'=' after " + key);
    c.skip_spaces();
    if (key == "t" || key == "theta") {
      if (has_t) throw ParseError("theta given twice", key_col);
      const std::size_t col = c.column();
      const long t = c.integer("theta");
      if (t != 1 && t != -1) throw ParseError("theta must be 1 or -1", col);
      spec.theta = t == 1 ? perms::Side::Right : perms::Side::Left;
      has_t = true;
    } else if (key == "b") {
      if (has_b) throw ParseError("b given twice", key_col);
      spec.b = size_at(c);
      has_b = true;
    } else if (key == "d") {
      if (has_d) throw ParseError("d given twice", key_col);
      spec.d = size_at(c);
      has_d = true;
    } else {
      throw ParseError("unknown key '" + key + "' (expected t, b or d)", key_col);
    }
    c.skip_spaces();
  } while (c.accept(','));
  if (!c.done()) c.fail("unexpected trailing text");
  if (!has_t) throw ParseError("missing t=1 or t=-1", 0);
  if (!has_b && !has_d) throw ParseError("give at least one of b and d", 0);
  if (!has_b) spec.b = freeness::SizeExpr::complement();
  if (!has_d) spec.d = freeness::SizeExpr::complement();
  return spec;
}

std::vector<std::size_t> parse_grid(const std::string& text) {
  Cursor c(text);
  std::vector<std::size_t> grid;
  do {
    c.skip_spaces();
    grid.push_back(c.positive("grid size"));
    c.skip_spaces();
  } while (c.accept(','));
  if (!c.done()) c.fail("unexpected trailing text");
  return grid;
}

}  // namespace ptlab::grammar
