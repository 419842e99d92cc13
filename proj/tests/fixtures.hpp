#pragma once

#include "incalg/poset.hpp"

namespace fx {

using incalg::Poset;

inline Poset chain2() { return Poset::from_covers({"a", "b"}, {{"a", "b"}}); }
inline Poset chain3() { return Poset::from_covers({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}); }
inline Poset diamond() {
  return Poset::from_covers({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
}
inline Poset vee() { return Poset::from_covers({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}}); }
inline Poset wedge() { return Poset::from_covers({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}}); }
// The fence a<c>b<d and the crown a,b<c,d.
inline Poset fence() { return Poset::from_covers({"a", "b", "c", "d"}, {{"a", "c"}, {"b", "c"}, {"b", "d"}}); }
inline Poset crown() {
  return Poset::from_covers({"a", "b", "c", "d"}, {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
}
inline Poset two_chains() { return Poset::from_covers({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}}); }

}  // namespace fx
