#pragma once

#include <string>
#include <vector>

#include "icoq/poly.hpp"

namespace icoq {

// Reference data transcribed from the published source, keyed by the citation
// slugs used in verification reports. IndexOutOfRange for an unknown key.
const std::string& fixture_text(const std::string& key);

// Parse a polynomial-valued fixture in the given registry.
MultiPoly<Rational> fixture_poly(const std::string& key, std::vector<std::string> vars);

// The degree-30 relation as displayed: the last summand is printed as a
// multiple of a squared bracket, so the polynomial is assembled structurally.
MultiPoly<Rational> fixture_phi();

// The branch curve on the chart where the weight-one coordinate is nonzero;
// its display also carries a squared bracket.
MultiPoly<Rational> fixture_d_chart();

struct CharTableFixture {
  std::vector<std::string> col_labels;
  std::vector<std::string> row_labels;
  std::vector<std::vector<std::string>> cells;  // entries as printable scalars
};

CharTableFixture fixture_s5_table();
// Cells are written over sqrt(5), in the symbol "s".
CharTableFixture fixture_binary_table();

struct SubgroupRowFixture {
  size_t order;
  std::string label;
  std::string generators;  // semicolon-separated cycle words
  bool in_alternating;
  size_t count;
  size_t normalizer_order;
};
std::vector<SubgroupRowFixture> fixture_subgroup_rows();

struct LefRowFixture {
  std::string label;
  size_t size;
  int order;
  long tr_w4;
  long lef;
};
std::vector<LefRowFixture> fixture_lefschetz_rows();

}  // namespace icoq
