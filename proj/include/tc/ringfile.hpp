#pragma once

#include <iosfwd>

#include "tc/classify.hpp"

namespace tc {

struct ParseOptions {
  RingLimits limits;
  Exec policy = Exec::Parallel;
};

// Line-oriented ring files: `ring <name>`, `coeff Z|Q|F_p`, `dim <m>`,
// `basis <label>:<deg> ...`, `mul <a>*<b> = <terms>`, '#' comments.  The
// unit "1" is implicit (it may be listed, but only first).  Parsing
// finishes with full ring validation, so syntax errors arrive as
// ParseError with a line number and semantic ones as RingError.
RingPtr parse_ring(std::istream& in, const ParseOptions& opts = {});
RingPtr parse_ring_text(const std::string& text, const ParseOptions& opts = {});
std::string serialize_ring(const RingPtr& r);

// Manifold files: `manifold <name>`, `orientable true|false`,
// `pi1rank <r>`, `dim <m>`, `homology <i>:<rank>[,<q>...]`, followed by
// one ring section per coefficient ring.  Structural validation is left
// to validate_manifold_data.
ManifoldData parse_manifold(std::istream& in, const ParseOptions& opts = {});
ManifoldData parse_manifold_text(const std::string& text,
                                 const ParseOptions& opts = {});
std::string serialize_manifold(const ManifoldData& d);

}  // namespace tc
