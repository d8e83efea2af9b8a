#pragma once

#include "terw/d2group.hpp"

namespace terw::testing {

inline D2Group s3() { return make_family(DihedralSpec{{{3, 1}}}); }
inline D2Group d4() { return make_family(DihedralSpec{{{2, 2}}}); }
inline D2Group q8() { return make_family(DicyclicSpec{{{2, 2}}, {2}}); }
inline D2Group sd16() { return make_family(G2Spec{8, 3, 0}); }

}  // namespace terw::testing
