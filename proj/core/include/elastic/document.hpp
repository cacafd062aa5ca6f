#ifndef ELASTIC_DOCUMENT_HPP
#define ELASTIC_DOCUMENT_HPP

#include <string>
#include <vector>

#include "elastic/vc.hpp"

namespace elastic {

/// {"kind": "curve"|"region", "dimension": d, "id": "...", "payload": ...}
/// Curve payload: [[x, y, ...], ...]. Region payload: {"outer": ring, "holes": [ring, ...]}.
struct GeometryDocument {
  std::string id;
  int dimension = 0;
  Shape shape;

  bool is_curve() const { return std::holds_alternative<PolygonalCurve>(shape); }
  friend bool operator==(const GeometryDocument&, const GeometryDocument&) = default;
};

/// Parse failure with a location: "line L, column C" for syntax errors,
/// a JSON path such as "$[1].payload[3][0]" for structural ones.
class ParseError : public InputError {
 public:
  ParseError(const std::string& location, const std::string& message);
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

/// One document or an array of documents.
std::vector<GeometryDocument> parse_documents(const std::string& text);
/// Exactly one document.
GeometryDocument parse_document(const std::string& text);

std::string serialize(const GeometryDocument& doc, int indent = -1);
std::string serialize(const std::vector<GeometryDocument>& docs, int indent = -1);

/// Reads a whole file; InputError if it cannot be opened.
std::string read_text_file(const std::string& path);

}  // namespace elastic

#endif  // ELASTIC_DOCUMENT_HPP
