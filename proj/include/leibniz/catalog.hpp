#pragma once

#include <functional>
#include <map>
#include <variant>

#include "leibniz/diamond.hpp"
#include "leibniz/modules.hpp"

namespace leibniz {

enum class CatalogKind { algebra, module, embedding };

struct ParamSpec {
  std::string name;
  Scalar default_value;
};

using ParamMap = std::map<std::string, Scalar>;
using CatalogItem = std::variant<Algebra, RightModule, MatrixEmbedding>;

struct CatalogEntry {
  std::string name;
  CatalogKind kind;
  std::vector<ParamSpec> params;
  std::string description;
  std::function<CatalogItem(const ParamMap&)> build;
};

/// All registered entries in a fixed order.
const std::vector<CatalogEntry>& catalog_entries();

const CatalogEntry* catalog_find(const std::string& name);

/// Builds an entry; missing parameters take their defaults, unknown ones are
/// an error.
CatalogItem catalog_build(const std::string& name, const ParamMap& overrides = {});

Algebra catalog_algebra(const std::string& name, const ParamMap& overrides = {});
RightModule catalog_module(const std::string& name, const ParamMap& overrides = {});
MatrixEmbedding catalog_embedding(const std::string& name, const ParamMap& overrides = {});

/// Two-parameter family over the real diamond (basis J,P1,P2,T,X1..X4).
Algebra l_family(const Scalar& alpha1, const Scalar& alpha2);
/// One-parameter family over the complex diamond (basis J,Pp,Pm,T,X1..X4).
Algebra m_family(const Scalar& alpha);
/// Diamond with the degree-truncated polynomial module attached,
/// basis (one, x, del, e, x0..xN); dimension N+5.
Algebra fock_algebra(Index degree);

const char* catalog_kind_name(CatalogKind k);

}  // namespace leibniz
