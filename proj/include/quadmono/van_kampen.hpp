#ifndef QUADMONO_VAN_KAMPEN_HPP
#define QUADMONO_VAN_KAMPEN_HPP

#include <vector>

#include "quadmono/braid.hpp"
#include "quadmono/monodromy.hpp"
#include "quadmono/presentation.hpp"
#include "quadmono/word.hpp"

namespace quadmono {

enum class ProjectiveOrientation {
  descending,  // x_p ... x_1
  ascending,   // x_1 ... x_p
};

struct PresentOptions {
  ArtinConvention convention = ArtinConvention::upper_conjugates;
  ProjectiveOrientation orientation = ProjectiveOrientation::descending;
};

/// { b(x_i) x_i^-1 : i = 1..p } reduced, canonical and deduplicated, with
/// trivial relators dropped.
inline std::vector<FreeWord> relations_from_factor(const Braid& b,
                                                   ArtinConvention conv = ArtinConvention::upper_conjugates) {
  Presentation p = Presentation::numbered(b.strands());
  for (Gen i = 1; i <= b.strands(); ++i) {
    const FreeWord x = FreeWord::generator(i);
    p.add_relator(artin_apply(b, x, conv) * x.inverse());
  }
  return normalize(p, false).relators;
}

inline FreeWord projective_relator(unsigned points, ProjectiveOrientation o) {
  FreeWord w;
  for (unsigned k = 1; k <= points; ++k)
    w *= FreeWord::generator(o == ProjectiveOrientation::descending ? points + 1 - k : k);
  return w;
}

/// Van Kampen presentation on generators "1".."p": the union of the factor
/// relations plus, if requested, the projective relator (flagged).
inline Presentation present(const MonodromyTable& table, const PresentOptions& opts = {}) {
  validate(table);
  Presentation p = Presentation::numbered(table.points, "");
  for (const auto& f : table.factors)
    for (auto& r : relations_from_factor(factor_braid(f, table.points), opts.convention)) p.add_relator(r);
  if (table.include_projective) {
    p.projective = projective_relator(table.points, opts.orientation);
    p.add_relator(*p.projective);
  }
  p = normalize(p, false);
  p.meta["source"] = "braid";
  if (!table.name.empty()) p.meta["case"] = table.name;
  if (table.reconstructed) p.meta["reconstructed"] = "true";
  return p;
}

}  // namespace quadmono

#endif  // QUADMONO_VAN_KAMPEN_HPP
