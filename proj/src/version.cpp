#include "homalg/version.hpp"

namespace homalg {

const char* version_string() { return "homalg 0.1.0"; }
const char* pivot_rule_id() { return "markowitz-mincount/leftmost-canonical"; }

}  // namespace homalg
