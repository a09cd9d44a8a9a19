#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "tom/group.hpp"
#include "tom/marks.hpp"
#include "tom/permutation.hpp"

namespace tom {

struct GroupRecord {
  std::size_t order = 0;
  std::size_t catalog_id = 0;
  std::size_t degree = 0;
  std::vector<Permutation> generators;

  GroupLabel label() const { return {order, catalog_id}; }
};

// Catalog format v1:
//
//   # comment
//   group <order> <catalog_id>
//   gen <img_0> ... <img_{d-1}>
//   end
//
// Every record is validated eagerly (bijective generators, one degree per
// group, closure size = order, unique (order, id)). Errors throw ParseError
// with the offending line.
std::vector<GroupRecord> parse_catalog(std::string_view text);

std::string write_catalog(const std::vector<GroupRecord>& records);

// Reads `path`; if it is a directory, reads <path>/order<order>.txt.
// Records of other orders are dropped when order != 0.
std::vector<GroupRecord> load_catalog(const std::filesystem::path& path, std::size_t order = 0);

FiniteGroup build_group(const GroupRecord& record);

// Sparse marks format:
//
//   tom <group_order> <catalog_id|-> <n>
//   orders <o_1> ... <o_n>
//   row <j>:<v> ...          (n lines, nonzero entries, j increasing)
std::string write_marks(const MarksMatrix& m);
MarksMatrix read_marks(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
// Writes via a temporary file and rename.
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace tom
