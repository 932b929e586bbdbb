#ifndef WSI_SELFTEST_HPP
#define WSI_SELFTEST_HPP

#include <ostream>
#include <string>

namespace wsi {

// Identity suites shared by `wsi selftest` and the acceptance harness.
// Each returns true on success and appends details to msg on failure.
bool check_group_catalog(std::string& msg);
bool check_product_relations(std::string& msg);
bool check_cheb_tables(std::string& msg);
bool check_character_formula(long entry_cap, std::string& msg);
bool check_defining_identity(long entry_cap, std::string& msg);
bool check_log_recovery(size_t trials, unsigned seed, std::string& msg);
bool check_eval_sets(std::string& msg);
bool check_wcross_structure(std::string& msg);
bool check_roundtrip_smoke(std::string& msg);

// Runs every suite, one line each; returns 0 when all pass, 1 otherwise.
int run_selftest(std::ostream& os);

}  // namespace wsi

#endif
