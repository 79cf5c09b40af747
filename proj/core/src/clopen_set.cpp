#include "drshadow/clopen_set.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace drshadow {

NatSet::NatSet(std::vector<std::uint64_t> elements, std::optional<std::uint64_t> tail_from)
    : elements_(std::move(elements)), tail_from_(tail_from) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  if (tail_from_) {
    std::erase_if(elements_, [&](std::uint64_t e) { return e >= *tail_from_; });
    while (!elements_.empty() && *tail_from_ > 0 && elements_.back() == *tail_from_ - 1) {
      elements_.pop_back();
      --*tail_from_;
    }
  }
}

bool NatSet::contains(const Point& p) const {
  if (is_infinity(p)) return tail_from_.has_value();
  const auto* n = std::get_if<NatPoint>(&p);
  if (n == nullptr) return false;
  if (tail_from_ && n->value >= *tail_from_) return true;
  return std::binary_search(elements_.begin(), elements_.end(), n->value);
}

NatSet NatSet::intersect(const NatSet& other) const {
  std::vector<std::uint64_t> out;
  for (auto e : elements_) {
    if (other.contains(NatPoint{e})) out.push_back(e);
  }
  for (auto e : other.elements_) {
    if (contains(NatPoint{e})) out.push_back(e);
  }
  std::optional<std::uint64_t> tail;
  if (tail_from_ && other.tail_from_) tail = std::max(*tail_from_, *other.tail_from_);
  return NatSet(std::move(out), tail);
}

CylinderUnion::CylinderUnion(std::vector<std::string> words) {
  for (const auto& w : words) {
    if (!std::all_of(w.begin(), w.end(), [](char c) { return c == '0' || c == '1'; })) {
      throw DynamicsError(ErrorCode::kParse, "cylinder word must be a bit string: '" + w + "'");
    }
  }
  std::set<std::string> current(words.begin(), words.end());
  bool changed = true;
  while (changed) {
    changed = false;
    // Drop words that already lie under a shorter word of the set.
    for (auto it = current.begin(); it != current.end();) {
      bool covered = false;
      for (std::size_t len = 0; len < it->size() && !covered; ++len) {
        covered = current.count(it->substr(0, len)) > 0;
      }
      if (covered) {
        it = current.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
    // Merge sibling pairs w0, w1 into w.
    for (const auto& w : current) {
      if (w.empty() || w.back() != '0') continue;
      std::string sibling = w;
      sibling.back() = '1';
      if (current.count(sibling) > 0) {
        std::string parent = w.substr(0, w.size() - 1);
        current.erase(sibling);
        current.erase(w);
        current.insert(std::move(parent));
        changed = true;
        break;
      }
    }
  }
  words_.assign(current.begin(), current.end());
}

bool CylinderUnion::contains(const CantorPoint& p) const {
  return std::any_of(words_.begin(), words_.end(),
                     [&](const std::string& w) { return p.starts_with(w); });
}

CylinderUnion CylinderUnion::intersect(const CylinderUnion& other) const {
  std::vector<std::string> out;
  for (const auto& a : words_) {
    for (const auto& b : other.words_) {
      if (b.starts_with(a)) {
        out.push_back(b);
      } else if (a.starts_with(b)) {
        out.push_back(a);
      }
    }
  }
  return CylinderUnion(std::move(out));
}

bool ClopenSet::is_empty() const {
  return std::visit([](const auto& s) { return s.empty(); }, rep_);
}

bool ClopenSet::contains(const Point& p) const {
  if (const auto* n = std::get_if<NatSet>(&rep_)) return n->contains(p);
  const auto* c = std::get_if<CantorPoint>(&p);
  return c != nullptr && std::get<CylinderUnion>(rep_).contains(*c);
}

ClopenSet ClopenSet::intersect(const ClopenSet& other) const {
  if (is_empty() || other.is_empty()) return is_nat() ? ClopenSet(NatSet{}) : empty_set();
  if (is_nat() != other.is_nat()) {
    throw DynamicsError(ErrorCode::kInvalidArgument,
                        "cannot intersect a set of naturals with a cylinder union");
  }
  if (is_nat()) return ClopenSet(as_nat().intersect(other.as_nat()));
  return ClopenSet(as_cylinders().intersect(other.as_cylinders()));
}

bool ClopenSet::operator==(const ClopenSet& other) const {
  if (is_empty() || other.is_empty()) return is_empty() && other.is_empty();
  return rep_ == other.rep_;
}

std::string ClopenSet::to_string() const {
  if (is_empty()) return "empty";
  if (is_nat()) {
    const auto& s = as_nat();
    std::string out = "{";
    bool first = true;
    for (auto e : s.elements()) {
      if (!first) out += ",";
      out += std::to_string(e);
      first = false;
    }
    if (s.tail_from()) {
      if (!first) out += ",";
      out += std::to_string(*s.tail_from()) + "..";
    }
    return out + "}";
  }
  std::string out;
  for (const auto& w : as_cylinders().words()) {
    if (!out.empty()) out += "+";
    out += "Z(" + w + ")";
  }
  return out;
}

ClopenSet ClopenSet::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text == "empty") return empty_set();
  if (text.starts_with("{")) {
    if (!text.ends_with("}")) throw DynamicsError(ErrorCode::kParse, "unterminated set literal");
    auto body = text.substr(1, text.size() - 2);
    std::vector<std::uint64_t> elements;
    std::optional<std::uint64_t> tail;
    while (!body.empty()) {
      const auto comma = body.find(',');
      auto item = body.substr(0, comma);
      body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
      while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
      while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
      const bool is_tail = item.ends_with("..");
      if (is_tail) item.remove_suffix(2);
      std::uint64_t value = 0;
      const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
      if (ec != std::errc() || ptr != item.data() + item.size() || item.empty()) {
        throw DynamicsError(ErrorCode::kParse, "bad set element '" + std::string(item) + "'");
      }
      if (is_tail) {
        tail = tail ? std::min(*tail, value) : value;
      } else {
        elements.push_back(value);
      }
    }
    return ClopenSet(NatSet(std::move(elements), tail));
  }
  std::vector<std::string> words;
  while (!text.empty()) {
    const auto plus = text.find('+');
    auto item = text.substr(0, plus);
    text = plus == std::string_view::npos ? std::string_view{} : text.substr(plus + 1);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.starts_with("Z(") || !item.ends_with(")")) {
      throw DynamicsError(ErrorCode::kParse, "bad cylinder literal '" + std::string(item) + "'");
    }
    words.emplace_back(item.substr(2, item.size() - 3));
  }
  return ClopenSet(CylinderUnion(std::move(words)));
}

}  // namespace drshadow
