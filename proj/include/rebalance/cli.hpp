#pragma once

// Command-line surface. Subcommands:
//   resample  - run one sampler on a CSV file
//   ensemble  - emit EasyEnsemble / BalanceCascade subset files
//   generate  - write a synthetic imbalanced dataset
//   stats     - print per-class counts and the balancing ratio
// Exit codes: 0 success, 2 usage error, 1 data/sampler error (with a
// one-line diagnostic on stderr).

namespace rebalance {

int run_cli(int argc, const char* const* argv);

}  // namespace rebalance
