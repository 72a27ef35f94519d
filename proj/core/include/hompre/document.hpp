#pragma once

#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "hompre/algebra.hpp"
#include "hompre/bialgebra.hpp"
#include "hompre/dendriform.hpp"
#include "hompre/matched_pair.hpp"
#include "hompre/report.hpp"
#include "hompre/representation.hpp"

namespace hompre {

enum class Kind {
  hom_lie,
  hom_pre_lie,
  representation,
  matched_pair_lie,
  matched_pair_pre_lie,
  bilinear_form,
  tensor2,
  linear_map,
  dendriform,
  bialgebra,
  manin_triple,
  o_operator,
};

std::string_view kind_name(Kind k);
/// Throws ParseError for an unknown tag.
Kind kind_from_name(std::string_view name);

/// A parsed document. Representations of Hom-Lie and Hom-pre-Lie algebras
/// share the "representation" kind.
class Document {
public:
  using Value = std::variant<HomLieAlgebra, HomPreLieAlgebra, HomLieRep, HomPreLieRep, LieMatchedPair,
                             PreLieMatchedPair, BilinearForm, Tensor2, LinearMap, HomLDendriform, Bialgebra,
                             ManinTriple, OOperator>;

  template <typename T>
    requires(!std::is_same_v<std::decay_t<T>, Document>)
  Document(T value) : value_(std::move(value)) {}  // NOLINT: implicit by design

  Kind kind() const;
  const Value& value() const { return value_; }

  template <typename T>
  bool holds() const { return std::holds_alternative<T>(value_); }
  /// Throws UnsupportedKind when the document holds another type.
  template <typename T>
  const T& as(std::string_view role = "input") const {
    if (const T* p = std::get_if<T>(&value_)) return *p;
    throw_wrong_kind(role);
  }

private:
  [[noreturn]] void throw_wrong_kind(std::string_view role) const;
  Value value_;
};

/// Parses one document. Throws ParseError with line and column for syntax
/// errors and with a field path for structural errors; unknown fields,
/// duplicate keys and non-canonical rationals are rejected.
Document parse_document(std::string_view text);
/// Parses a JSON array of documents as written by serialize_documents.
std::vector<Document> parse_documents(std::string_view text);

/// Canonical text: fixed field order, two-space indent, sparse tensor entries
/// in lexicographic order, trailing newline.
std::string serialize(const Document& doc);
std::string serialize_documents(const std::vector<Document>& docs);

/// Machine-readable report body.
std::string serialize_report(const ValidationReport& report);

}  // namespace hompre
