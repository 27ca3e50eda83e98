#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "typik/error.hpp"
#include "typik/kb.hpp"

namespace typik {

struct SourceSpan {
  std::string label;
  int line = 1;        // 1-based
  int column = 1;      // 1-based, first column of the token
  int end_column = 1;  // one past the last column
};

class ParseError : public Error {
 public:
  enum class Kind { SyntaxError, UnknownName, NestedTypicality, ComplexQueryConcept, ExtendedConceptInProduct };

  ParseError(Kind kind, SourceSpan span, const std::string& message);

  Kind kind() const { return kind_; }
  const SourceSpan& span() const { return span_; }
  const std::string& detail() const { return detail_; }

 private:
  Kind kind_;
  SourceSpan span_;
  std::string detail_;
};

std::string to_string(ParseError::Kind k);

struct Document {
  KnowledgeBase kb;
  std::vector<Query> queries;
};

// Parses a full .tkb document, including any query: section.
Document parse_document(std::string_view text, const std::string& label = "<input>");

// Parses a .tkb document; query sections are accepted and ignored.
KnowledgeBase parse_kb(std::string_view text, const std::string& label = "<input>");

// Accepts "query: T(C)(a)." as well as the bare "T(C)(a)"; names resolve against kb.
Query parse_query(std::string_view text, const KnowledgeBase& kb,
                  const std::string& label = "<query>");

std::string print_kb(const KnowledgeBase& kb);

KnowledgeBase read_kb_file(const std::string& path);
Document read_document_file(const std::string& path);

}  // namespace typik
