#pragma once

namespace homalg {

const char* version_string();
const char* pivot_rule_id();

}  // namespace homalg
