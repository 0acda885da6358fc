// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 prestige-rank contributors

#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace prestige::csv {

/// RFC-4180 record reader. Quoted fields may contain commas, doubled quotes
/// and embedded line breaks. Accepts LF and CRLF endings, strips a UTF-8 BOM,
/// skips fully blank lines. record_line() is the 1-based physical line the
/// current record started on, for error messages.
class Reader {
public:
    Reader(std::istream& in, std::string source_name);

    std::optional<std::vector<std::string>> next();

    std::size_t record_line() const { return record_line_; }
    const std::string& source() const { return source_; }

    /// Throws ParseError tagged "<source>:<record_line>".
    [[noreturn]] void fail(const std::string& message) const;

private:
    std::istream& in_;
    std::string source_;
    std::size_t line_ = 1;
    std::size_t record_line_ = 1;
    bool at_start_ = true;
};

class Writer {
public:
    explicit Writer(std::ostream& out) : out_(out) {}
    void row(std::span<const std::string> fields);
    void row(std::initializer_list<std::string> fields);

private:
    std::ostream& out_;
};

std::string escape_field(std::string_view field);

/// Validates that the file's header row is exactly `expected`. The header is
/// the schema stamp for CSV artifacts; a mismatch raises SchemaError. Returns
/// false when the file is completely empty (an empty table).
bool expect_header(Reader& reader, std::span<const std::string> expected);

}  // namespace prestige::csv
