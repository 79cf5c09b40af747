#include "drshadow/cylinder.hpp"

namespace drshadow {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

void require_compact(const ClopenSet& k) {
  if (k.is_nat() && k.as_nat().tail_from()) {
    throw DynamicsError(ErrorCode::kInvalidArgument, "K must be a compact subset of the base space");
  }
}

}  // namespace

GeneralizedCylinder GeneralizedCylinder::z(std::vector<ClopenSet> prefix, ClopenSet k) {
  if (prefix.empty()) throw DynamicsError(ErrorCode::kInvalidArgument, "Z[..] needs at least one factor");
  for (const auto& b : prefix) require_compact(b);
  require_compact(k);
  return GeneralizedCylinder(Kind::kZ, std::move(prefix), std::move(k));
}

GeneralizedCylinder GeneralizedCylinder::c(ClopenSet k) {
  require_compact(k);
  return GeneralizedCylinder(Kind::kC, {}, std::move(k));
}

GeneralizedCylinder GeneralizedCylinder::parse(std::string_view text) {
  text = trim(text);
  if (text.size() < 3 || text[1] != '[' || text.back() != ']') {
    throw DynamicsError(ErrorCode::kParse, "bad cylinder literal '" + std::string(text) + "'");
  }
  auto body = text.substr(2, text.size() - 3);
  if (text.front() == 'C') return c(ClopenSet::parse(body));
  if (text.front() != 'Z') throw DynamicsError(ErrorCode::kParse, "cylinder literal must start with Z or C");
  const auto bar = body.rfind('|');
  if (bar == std::string_view::npos) throw DynamicsError(ErrorCode::kParse, "Z[..] literal needs '| K'");
  const auto k = ClopenSet::parse(body.substr(bar + 1));
  auto factors = trim(body.substr(0, bar));
  std::vector<ClopenSet> prefix;
  constexpr std::string_view kTimes = " x ";
  while (!factors.empty()) {
    const auto cut = factors.find(kTimes);
    prefix.push_back(ClopenSet::parse(factors.substr(0, cut)));
    factors = cut == std::string_view::npos ? std::string_view{} : factors.substr(cut + kTimes.size());
  }
  return z(std::move(prefix), k);
}

std::string GeneralizedCylinder::to_string() const {
  if (kind_ == Kind::kC) return "C[" + avoid_.to_string() + "]";
  std::string out = "Z[";
  for (std::size_t i = 0; i < prefix_.size(); ++i) {
    if (i > 0) out += " x ";
    out += prefix_[i].to_string();
  }
  return out + " | " + avoid_.to_string() + "]";
}

bool cyl_member(const GeneralizedCylinder& c, const W0Word& x) {
  if (c.kind() == GeneralizedCylinder::Kind::kC) {
    return x.is_zero() || !c.avoid().contains(x.coordinate(1));
  }
  const auto k = c.prefix().size();
  if (!x.length_at_least(k)) return false;
  const auto head = x.head(k + 1);
  for (std::size_t i = 0; i < k; ++i) {
    if (!c.prefix()[i].contains(head[i])) return false;
  }
  // A word of length exactly k satisfies the last clause vacuously.
  return head.size() == k || !c.avoid().contains(head[k]);
}

}  // namespace drshadow
