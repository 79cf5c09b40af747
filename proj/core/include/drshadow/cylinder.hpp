#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "drshadow/clopen_set.hpp"
#include "drshadow/words.hpp"

namespace drshadow {

// Z[B1 x ... x Bk, K]: words of length >= k with x_i in B_i and, when the
// length exceeds k, x_{k+1} outside K.
// C[K]: Zero together with every word whose first letter is outside K.
class GeneralizedCylinder {
 public:
  enum class Kind { kZ, kC };

  static GeneralizedCylinder z(std::vector<ClopenSet> prefix, ClopenSet k);
  static GeneralizedCylinder c(ClopenSet k);

  // `Z[S1 x S2 | K]` or `C[K]`, with set literals as in ClopenSet::parse.
  static GeneralizedCylinder parse(std::string_view text);

  Kind kind() const { return kind_; }
  const std::vector<ClopenSet>& prefix() const { return prefix_; }
  const ClopenSet& avoid() const { return avoid_; }

  std::string to_string() const;

 private:
  GeneralizedCylinder(Kind kind, std::vector<ClopenSet> prefix, ClopenSet k)
      : kind_(kind), prefix_(std::move(prefix)), avoid_(std::move(k)) {}

  Kind kind_;
  std::vector<ClopenSet> prefix_;
  ClopenSet avoid_;
};

bool cyl_member(const GeneralizedCylinder& c, const W0Word& x);

}  // namespace drshadow
