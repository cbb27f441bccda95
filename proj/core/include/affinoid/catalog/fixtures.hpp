#pragma once

#include <string>
#include <vector>

#include "affinoid/catalog/groupoids.hpp"
#include "affinoid/exterior/tensor.hpp"

namespace affinoid::catalog {

enum class FixtureKind { multivector, form, tensor };

std::string to_string(FixtureKind kind);

/// A named field on a catalog groupoid with its expected verdicts. `ref` is
/// the label of the worked example or statement the verdict comes from;
/// "derived" marks fixtures whose verdict follows from an explicit
/// computation rather than a stated example.
struct Fixture {
  std::string name;
  FixtureKind kind = FixtureKind::multivector;
  /// (k,0) for multivectors, (0,k) for forms, (p,q) for tensors.
  TensorField field;
  bool affine = false;
  bool multiplicative = false;
  std::string ref;
};

struct CatalogEntry {
  std::string id;
  GroupoidData groupoid;
  std::vector<Fixture> fixtures;
};

/// Builds the fixtures for one catalog groupoid; throws std::out_of_range for
/// an unknown id.
CatalogEntry entry(const std::string& id);

/// Every entry, in groupoid_ids() order.
std::vector<CatalogEntry> entries();

}  // namespace affinoid::catalog
