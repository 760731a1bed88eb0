#ifndef TRILINK_TABLES_HPP
#define TRILINK_TABLES_HPP

#include <map>
#include <string>

#include "trilink/invariants.hpp"

namespace trilink {

// Recomputes the example tables from the data directory's diagram files
// (bouquet_b.txt, bouquet_b_mirror.txt, k1.txt .. k6.txt). Keys are the
// golden file names under <data>/golden/. Throws std::runtime_error naming
// the missing file if a transcription file is absent.
std::map<std::string, std::string> compute_tables(const invariant_context& ctx,
                                                  const std::string& data_dir);

// Compares recomputed tables against the stored golden files. Returns a
// cell-level diff description, empty when everything matches.
std::string diff_against_golden(const invariant_context& ctx, const std::string& data_dir);

}  // namespace trilink

#endif
