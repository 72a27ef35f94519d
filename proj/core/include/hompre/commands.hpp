#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hompre/dendriform.hpp"
#include "hompre/document.hpp"
#include "hompre/report.hpp"

namespace hompre {

enum ExitCode : int { exit_holds = 0, exit_fails = 1, exit_parse_error = 2, exit_precondition = 3 };

/// One document, or a JSON array of documents.
std::vector<Document> read_documents(std::string_view text);

/// Dispatches to the validator of the document's kind. O-operators and
/// bialgebras also report their ingredients under "rep/", "primal/", "dual/".
/// Throws UnsupportedKind for forms, tensors and linear maps, which only
/// validate in context.
ValidationReport run_validate(const Document& doc);

const std::vector<std::string_view>& derive_constructions();
/// Throws UnknownSlug for an unknown construction and InvalidInput when the
/// inputs do not match its arity or kinds.
Document run_derive(std::string_view construction, const std::vector<Document>& inputs,
                    SemidirectVariant variant = SemidirectVariant::mu_star);

const std::vector<std::string_view>& check_slugs();
/// The report holds exactly when the asserted (bi)conditional holds on the
/// instance. Throws UnknownSlug, InvalidInput on arity, and the construction's
/// own precondition errors.
ValidationReport run_check(std::string_view slug, const std::vector<Document>& inputs,
                           SemidirectVariant variant = SemidirectVariant::mu_star);

/// Input kinds and the identity being checked. Throws UnknownSlug.
std::string explain(std::string_view slug);

inline int exit_code(const ValidationReport& r) { return r.valid() ? exit_holds : exit_fails; }
/// Exit code for the exception currently being handled: 2 for parse errors,
/// 3 for everything else.
int exit_code_for_current_exception();

}  // namespace hompre
