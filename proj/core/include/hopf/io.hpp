#pragma once

#include "hopf/hopf_algebra.hpp"
#include "hopf/zoo.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace hopf {

/// Malformed JSON or a schema violation in an algebra, twist or group file.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Algebra file (JSON):
///   {"name", "conductor", "dim", "basis"?, "mult": [[i,j,k,c]...], "unit": [[i,c]...],
///    "comult": [[i,j,k,c]...], "counit": [[i,c]...], "antipode": [[i,j,c]...]}
/// mult [i,j,k,c]: b_i b_j has coefficient c on b_k; comult [i,j,k,c]: Delta(b_i)
/// has coefficient c on b_j (x) b_k; antipode [i,j,c]: S(b_j) has coefficient c on b_i.
/// Coefficients are strings in the cyclotomic grammar. Zero entries are omitted on write.
HopfAlgebra algebra_from_json(const std::string& text);
std::string algebra_to_json(const HopfAlgebra& h);
HopfAlgebra load_algebra(const std::string& path);
void save_algebra(const std::string& path, const HopfAlgebra& h);

/// Twist file (JSON): {"conductor", "dim", "F": [[i,j,c]...], "F_inv"?: [[i,j,c]...]};
/// [i,j,c] is the coefficient of b_i (x) b_j.
struct TwistData {
  int conductor = 1;
  std::size_t dim = 0;
  Vec f;
  std::optional<Vec> f_inv;
};

TwistData twist_from_json(const std::string& text);
std::string twist_to_json(const TwistData& t);
TwistData load_twist(const std::string& path);
void save_twist(const std::string& path, const TwistData& t);

/// Group file (JSON): {"table": [[...]...], "labels"?: [...], "name"?: "..."}.
GroupPresentation group_from_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace hopf
