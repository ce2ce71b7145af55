#ifndef BQR_DSL_HPP
#define BQR_DSL_HPP

// Plain-text type definitions.
//
//   type dend {
//     generators: lt, gt;
//     star: lt + gt;
//     relations: (lt.lt | lt.lt + lt.gt) (gt.lt | gt.lt) (lt.gt + gt.gt | gt.gt)
//   }
//
// "a.b | c.d" is the identity (x a y) b z = x c (y d z). Names that are not
// plain identifiers are written in double quotes, e.g. "(lt|gt)". A factor may
// also be a parenthesised linear combination: (lt + gt).lt. Coefficients are
// written p/q* in front of a term. The aux section binds names to linear
// combinations (comma separated); a missing star section marks a dual
// presentation. '#' starts a comment.

#include "bqr/type.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace bqr {

struct SourceSpan {
    std::size_t line = 1;    // 1-based
    std::size_t column = 1;  // 1-based, bytes
    std::size_t offset = 0;  // byte offset
    std::size_t length = 0;
};

class DslError : public std::runtime_error {
public:
    DslError(const std::string& msg, SourceSpan span);
    const SourceSpan& span() const { return span_; }
    const std::string& message() const { return msg_; }

private:
    std::string msg_;
    SourceSpan span_;
};

struct ParseResult {
    TypePresentation type;
    ValidationReport report;
};

// Syntax errors, unknown identifiers and duplicate generators throw DslError.
// Mathematical validity is reported, not thrown.
ParseResult parse_type(std::string_view text);

// Throws DslError when the parsed presentation does not validate.
TypePresentation parse_valid_type(std::string_view text);

enum class Format { dsl, json, latex };

std::string serialize(const TypePresentation& t, Format format);

// JSON interchange schema {name, generators, star, aux, relations:[{L, R}]}.
TypePresentation type_from_json(std::string_view text);

// DSL text of one relation "(L | R)" and of a generator combination.
std::string relation_text(const TypePresentation& t, const RelationElement& r);
std::string combination_text(const TypePresentation& t, const Vector& v);

// Matrix entries as "p/q" strings.
std::string matrix_to_json(const Matrix& m);

}  // namespace bqr

#endif
