#include <iterator>
#include <string>

#include "riesz/concavity.hpp"
#include "riesz/errors.hpp"

namespace riesz {

namespace {

const IntSet kC0 = {6, 12, 24, 32, 48, 60, 67, 72, 80, 104, 108, 122, 132, 137, 146, 150, 153, 168, 182, 187, 192, 195};

const IntSet kC1 = {4,   6,   12,  18,  20,  22,  24,  27,  32,  44,  48,  50,  60,  62,  67,  72,  75,  77,
                    78,  80,  88,  94,  96,  98,  100, 104, 108, 111, 112, 117, 122, 127, 132, 135, 137, 141,
                    144, 146, 150, 153, 155, 159, 160, 162, 168, 170, 174, 180, 182, 184, 187, 192, 195, 197};

const IntSet kC2 = {4,   6,   10,  12,  18,  20,  22,  24,  27,  28,  30,  32,  34,  40,  44,  45,  48,  50,  51,
                    54,  56,  60,  62,  67,  70,  72,  75,  77,  78,  80,  83,  88,  90,  92,  94,  96,  98,  100,
                    104, 106, 108, 111, 112, 115, 117, 122, 127, 130, 132, 135, 137, 141, 144, 146, 148, 150, 153,
                    155, 157, 159, 160, 162, 168, 170, 171, 174, 175, 177, 180, 182, 184, 187, 192, 195, 197};

const IntSet kC3 = {4,   6,   8,   9,   10,  12,  14,  18,  20,  22,  24,  27,  28,  30,  32,  34,  36,
                    40,  42,  44,  45,  48,  50,  51,  54,  56,  60,  62,  63,  67,  70,  72,  75,  77,
                    78,  80,  83,  88,  90,  92,  94,  96,  98,  100, 104, 106, 108, 111, 112, 115, 117,
                    122, 124, 127, 130, 132, 135, 137, 141, 143, 144, 146, 148, 150, 153, 155, 157, 159,
                    160, 162, 165, 168, 170, 171, 174, 175, 177, 178, 180, 182, 184, 187, 192, 195, 197};

}  // namespace

const IntSet& MagicCatalog::at(int s) const {
  auto it = sets.find(s);
  if (it == sets.end()) throw DomainError("no catalog set for s=" + std::to_string(s));
  return it->second;
}

Membership MagicCatalog::contains(int s, long n) const {
  auto it = sets.find(s);
  if (it == sets.end() || n < range_lo || n > range_hi) return Membership::unknown;
  return it->second.count(n) ? Membership::member : Membership::non_member;
}

bool MagicCatalog::chain_holds(std::string* first_failure) const {
  for (auto it = sets.begin(); it != sets.end(); ++it) {
    auto next = std::next(it);
    if (next == sets.end()) break;
    for (long n : it->second) {
      if (!next->second.count(n)) {
        if (first_failure)
          *first_failure = "N=" + std::to_string(n) + " in C(" + std::to_string(it->first) + ") but not in C(" +
                           std::to_string(next->first) + ")";
        return false;
      }
    }
  }
  return true;
}

MagicCatalog magic_catalog(bool pre_correction) {
  MagicCatalog c;
  c.pre_correction = pre_correction;
  c.sets = {{-1, {}}, {0, kC0}, {1, kC1}, {2, kC2}, {3, kC3}};
  if (pre_correction) {
    c.sets[2].erase(197);
    c.sets[3].erase(177);
    c.sets[3].erase(197);
  } else {
    std::string why;
    if (!c.chain_holds(&why)) throw NumericError("embedded catalog breaks the inclusion chain: " + why);
  }
  return c;
}

IntSet printed_difference_1_0() {
  return {4, 18, 20, 22, 27, 44, 50, 62, 75, 77, 78, 88, 94, 96, 98, 100,
          111, 112, 117, 127, 135, 141, 144, 155, 159, 160, 162, 170, 174, 180, 184, 197};
}

IntSet printed_difference_2_1() {
  return {10, 28, 30, 34, 40, 45, 51, 54, 56, 70, 83, 90, 92, 106, 115, 130, 148, 157, 171, 175, 177};
}

IntSet printed_difference_3_2() { return {8, 9, 14, 36, 42, 63, 124, 143, 165, 178}; }

}  // namespace riesz
