#pragma once

#include "supernomial/bijection.hpp"
#include "supernomial/ribbon.hpp"
#include "supernomial/rigged.hpp"
#include "supernomial/tableau.hpp"

#include <string>
#include <vector>

namespace supernomial::render {

// Box diagrams in French notation: row 1 at the bottom.
using Block = std::vector<std::string>;

Block diagram(const Partition& shape);
Block tableau(const MultiTableau& t);
// Each ribbon is drawn without internal walls and carries its letter at the
// origin cell.
Block ribbon_tableau(const RibbonTableau& t);
// Labels in boxes, vacancy number to the right of each labelled row.
Block rigged(const RiggedConfiguration& rc);
Block state(const RiggedState& s);
Block trace(const BijectionTrace& trace);

// Places blocks next to each other, aligned at the bottom.
Block beside(const std::vector<Block>& blocks, int gap = 3);
std::string str(const Block& block);

} // namespace supernomial::render
