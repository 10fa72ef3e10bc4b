#include "starsurg/homlattice.hpp"

#include <cctype>
#include <sstream>

#include "starsurg/errors.hpp"

namespace starsurg {

std::string ExcLabel::to_string() const {
  if (parts.size() == 1) return "e" + std::to_string(parts[0]);
  std::string out = "e(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts[i]);
  }
  return out + ")";
}

LatticeClass LatticeClass::exceptional(const ExcLabel& label) {
  LatticeClass x;
  x.set_coefficient(label, 1);
  return x;
}

Integer LatticeClass::coefficient(const ExcLabel& label) const {
  auto it = exc_.find(label);
  return it == exc_.end() ? Integer(0) : it->second;
}

void LatticeClass::set_coefficient(const ExcLabel& label, const Integer& value) {
  if (value == 0)
    exc_.erase(label);
  else
    exc_[label] = value;
}

void LatticeClass::add_coefficient(const ExcLabel& label, const Integer& delta) {
  set_coefficient(label, coefficient(label) + delta);
}

std::vector<ExcLabel> LatticeClass::support() const {
  std::vector<ExcLabel> out;
  out.reserve(exc_.size());
  for (const auto& [label, c] : exc_) out.push_back(label);
  return out;
}

LatticeClass& LatticeClass::operator+=(const LatticeClass& other) {
  h_ += other.h_;
  for (const auto& [label, c] : other.exc_) add_coefficient(label, c);
  return *this;
}

LatticeClass& LatticeClass::operator-=(const LatticeClass& other) {
  h_ -= other.h_;
  for (const auto& [label, c] : other.exc_) add_coefficient(label, -c);
  return *this;
}

LatticeClass& LatticeClass::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    h_ = 0;
    exc_.clear();
    return *this;
  }
  h_ *= scalar;
  for (auto& [label, c] : exc_) c *= scalar;
  return *this;
}

LatticeClass LatticeClass::operator-() const {
  LatticeClass out = *this;
  out *= -1;
  return out;
}

namespace {

void append_term(std::string& out, const Integer& c, const std::string& symbol) {
  if (c == 0) return;
  Integer mag = c < 0 ? Integer(-c) : c;
  if (out.empty()) {
    if (c < 0) out += "-";
  } else {
    out += c < 0 ? " - " : " + ";
  }
  if (mag != 1) out += mag.str();
  out += symbol;
}

}  // namespace

std::string LatticeClass::to_string() const {
  std::string out;
  append_term(out, h_, "h");
  for (const auto& [label, c] : exc_) append_term(out, c, label.to_string());
  return out.empty() ? "0" : out;
}

Integer pairing(const LatticeClass& x, const LatticeClass& y) {
  Integer sum = x.h() * y.h();
  const auto& small = x.exceptional_part().size() <= y.exceptional_part().size()
                          ? x.exceptional_part()
                          : y.exceptional_part();
  const LatticeClass& other = &small == &x.exceptional_part() ? y : x;
  for (const auto& [label, c] : small) sum -= c * other.coefficient(label);
  return sum;
}

Integer self_intersection(const LatticeClass& x) { return pairing(x, x); }

Integer c1_pairing(const LatticeClass& x) {
  // <3h - sum e, x> = 3 x_h + sum x_e under diag(1, -1, ...).
  Integer sum = 3 * x.h();
  for (const auto& [label, c] : x.exceptional_part()) sum += c;
  return sum;
}

Integer adjunction_defect(const LatticeClass& x) {
  return c1_pairing(x) - self_intersection(x) - 2;
}

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())); }

  Integer number() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  // Digits directly attached (no whitespace skipping): "e12".
  int attached_index() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a label index");
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }

  char raw_peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& msg) const {
    std::ostringstream os;
    os << msg << " at column " << pos_ + 1 << " in \"" << s_ << "\"";
    throw ParseError(os.str());
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

ExcLabel scan_label(Scanner& sc) {
  // 'e' already consumed.
  if (sc.raw_peek() == '(') {
    sc.expect('(');
    std::vector<int> parts;
    do {
      parts.push_back(static_cast<int>(sc.number()));
    } while (sc.accept(','));
    sc.expect(')');
    return ExcLabel(std::move(parts));
  }
  return ExcLabel(sc.attached_index());
}

}  // namespace

ExcLabel parse_exc_label(std::string_view text) {
  Scanner sc(text);
  sc.expect('e');
  ExcLabel label = scan_label(sc);
  if (!sc.done()) sc.fail("trailing characters");
  return label;
}

LatticeClass parse_lattice_class(std::string_view text) {
  Scanner sc(text);
  if (sc.done()) sc.fail("empty class");
  LatticeClass out;
  bool first = true;
  while (!sc.done()) {
    int sign = 1;
    if (sc.accept('-'))
      sign = -1;
    else if (!sc.accept('+') && !first)
      sc.fail("expected '+' or '-'");
    first = false;
    Integer coeff = 1;
    bool explicit_coeff = false;
    if (sc.at_digit()) {
      coeff = sc.number();
      explicit_coeff = true;
    }
    char c = sc.peek();
    if (c == 'h') {
      sc.accept('h');
      out.set_h(out.h() + sign * coeff);
    } else if (c == 'e') {
      sc.accept('e');
      out.add_coefficient(scan_label(sc), sign * coeff);
    } else if (explicit_coeff && coeff == 0) {
      // a bare "0" term
    } else {
      sc.fail("expected 'h' or an exceptional label");
    }
  }
  return out;
}

}  // namespace starsurg
