#include "supernomial/oracle.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace supernomial {

BigInt path_count_oracle(const std::vector<int>& lambda, const std::vector<int>& mu, int n,
                         Mode mode) {
  if (n < 1)
    throw std::invalid_argument("alphabet size must be at least 1");
  std::vector<int> target(n, 0);
  for (std::size_t a = 0; a < lambda.size(); ++a) {
    if (lambda[a] < 0)
      throw std::invalid_argument("content entries must be nonnegative");
    if (static_cast<int>(a) < n)
      target[a] = lambda[a];
    else if (lambda[a] != 0)
      return 0;
  }

  std::map<std::vector<int>, BigInt> counts{{std::vector<int>(n, 0), 1}};
  for (int part : mu) {
    if (part < 0)
      throw std::invalid_argument("mu entries must be nonnegative");
    std::map<std::vector<int>, BigInt> next;
    for (const auto& [content, ways] : counts) {
      std::vector<int> grown = content;
      // Distribute `part` letters over the alphabet: any amount per letter
      // for h, at most one per letter for e. Never exceed the target.
      std::function<void(int, int)> spread = [&](int letter, int left) {
        if (letter == n) {
          if (left == 0)
            next[grown] += ways;
          return;
        }
        int most = mode == Mode::symmetric ? left : std::min(left, 1);
        most = std::min(most, target[letter] - grown[letter]);
        for (int take = 0; take <= most; ++take) {
          grown[letter] += take;
          spread(letter + 1, left - take);
          grown[letter] -= take;
        }
      };
      spread(0, part);
    }
    counts = std::move(next);
  }
  auto it = counts.find(target);
  return it == counts.end() ? BigInt(0) : it->second;
}

} // namespace supernomial
