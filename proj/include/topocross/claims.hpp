#ifndef TOPOCROSS_CLAIMS_HPP
#define TOPOCROSS_CLAIMS_HPP

#include <map>
#include <string>
#include <vector>

namespace topocross {

// Named, runnable checks binding each of the source results to oracle queries
// on the generated drawings.
struct ClaimReport {
    std::string name;
    std::string params;
    std::string citation;
    std::string expected;
    std::string computed;
    bool pass = false;
    double millis = 0;
};

std::vector<std::string> claim_names();
ClaimReport run_claim(const std::string& name, const std::map<std::string, std::string>& params = {});
// Runs all claims; `threads` > 1 runs them concurrently.
std::vector<ClaimReport> run_all_claims(int threads = 1);

std::string format_report(const ClaimReport& r);

} // namespace topocross

#endif
