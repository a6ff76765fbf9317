#pragma once

#include <variant>

#include "leibniz/cohomology.hpp"
#include "leibniz/modules.hpp"

namespace leibniz {

struct NamedMatrix {
  std::string name;
  Mat matrix;
  friend bool operator==(const NamedMatrix& a, const NamedMatrix& b) {
    return a.name == b.name && matrices_equal(a.matrix, b.matrix);
  }
};

bool operator==(const RightModule& a, const RightModule& b);
bool operator==(const Cochain2& a, const Cochain2& b);

/// Ordered collection of named algebra / module / cochain / matrix blocks.
/// Section names are unique; module and cochain blocks refer to an algebra
/// block defined earlier in the document.
struct LbaDocument {
  using Section = std::variant<Algebra, RightModule, Cochain2, NamedMatrix>;
  std::vector<Section> sections;

  const Algebra* find_algebra(const std::string& name) const;
  const RightModule* find_module(const std::string& name) const;
  const Cochain2* find_cochain(const std::string& name) const;
  const NamedMatrix* find_matrix(const std::string& name) const;

  const Algebra* first_algebra() const;
  const RightModule* first_module() const;

  friend bool operator==(const LbaDocument& a, const LbaDocument& b);
};

/// Parses the LBA text format:
///
///   algebra <name>                     module <name> over <algebra>
///   dim <n>                            cochain <name> over <algebra>
///   basis <lbl> ...                    matrix <name> rows <r> cols <c>
///   [li,lj] = <scalar>*<lk> + ...      (vi,lj) = ... / f(li,lj) = ... / row <s> ...
///   end
///
/// Omitted products are zero; '#' starts a comment. Throws ParseError with
/// line/column on syntax errors, duplicate definitions and unknown labels.
LbaDocument lba_parse(std::string_view text);

std::string lba_format(const LbaDocument& doc);
std::string lba_format(const Algebra& a);
std::string lba_format(const RightModule& m);
std::string lba_format(const Algebra& base, const Cochain2& f);
std::string lba_format(const NamedMatrix& m);

}  // namespace leibniz
