#include <doctest.h>

#include <fstream>
#include <map>
#include <sstream>

#include "oracles.hpp"
#include "tom/catalog.hpp"
#include "tom/marks.hpp"
#include "tom/multiset.hpp"

// Values exported from an independent computer algebra system (see
// tools/export_reference.g): class count, subgroup count and the entry
// multiset of every bundled group.

namespace {

struct Reference {
  std::size_t classes = 0;
  std::size_t subgroups = 0;
  std::vector<std::pair<tom::Mark, std::size_t>> entries;
};

std::map<std::pair<std::size_t, std::size_t>, Reference> load_reference() {
  std::ifstream in(TOM_TEST_DATA_DIR "/gap_reference.txt");
  REQUIRE(in);
  std::map<std::pair<std::size_t, std::size_t>, Reference> out;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string tag, pair;
    std::size_t order = 0, id = 0;
    Reference r;
    ls >> tag >> order >> id >> r.classes >> r.subgroups;
    while (ls >> pair) {
      const auto colon = pair.find(':');
      r.entries.emplace_back(std::stoll(pair.substr(0, colon)), std::stoul(pair.substr(colon + 1)));
    }
    out[{order, id}] = r;
  }
  return out;
}

}  // namespace

TEST_CASE("every bundled group matches the reference values") {
  const auto reference = load_reference();
  CHECK(reference.size() == 411);
  std::size_t checked = 0;
  for (std::size_t order : {1,  2,  3,  4,  5,  6,  7,  8,  9,  10, 11, 12, 13, 14, 15, 16, 17,
                            18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 32, 64}) {
    for (const auto& record : oracle::catalog(order)) {
      CAPTURE(order);
      CAPTURE(record.catalog_id);
      const auto it = reference.find({order, record.catalog_id});
      REQUIRE(it != reference.end());
      const auto g = tom::build_group(record);
      const auto classes = tom::conjugacy_classes_of_subgroups(g);
      std::size_t subgroups = 0;
      for (const auto& c : classes) subgroups += c.class_size;
      const auto m = tom::table_of_marks(g, classes);
      CHECK(m.size() == it->second.classes);
      CHECK(subgroups == it->second.subgroups);
      CHECK(tom::entries_invariant(m.entries).pairs() == it->second.entries);
      ++checked;
    }
  }
  CHECK(checked == reference.size());
}
