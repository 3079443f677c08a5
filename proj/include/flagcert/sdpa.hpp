#ifndef FLAGCERT_SDPA_HPP
#define FLAGCERT_SDPA_HPP

#include <string>
#include <vector>

#include "flagcert/certificate.hpp"

namespace flagcert {

// Multiplier products available to the slack scalars of the exported SDP:
// every family-free graph at level 4, paired with the empty graph (so each
// scalar multiplies (red + blue - nonedge) x g).
std::vector<SlackTerm> default_slack_layout(Problem p);

// Feasibility SDP for the certificate identity in SDPA sparse format.
// Variables: the lambda/beta/rho block matrices, one diagonal block of slack
// scalars (default_slack_layout order) and one diagonal block of c_H slacks;
// one linear constraint per level-6 family-free graph. Irrational target
// entries are emitted as double approximations.
std::string export_sdp(Problem p);

}  // namespace flagcert

#endif
