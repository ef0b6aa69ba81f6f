#pragma once

#include <string>

namespace kolmo {

// Canonical description texts, embedded verbatim from data/ at build time.
const std::string& machine_spec_text();
const std::string& checker_rules_text();
const std::string& searcher_rules_text();

}  // namespace kolmo
