// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 prestige-rank contributors

#include "prestige/csv.hpp"

#include <istream>
#include <ostream>

#include "prestige/errors.hpp"

namespace prestige::csv {

Reader::Reader(std::istream& in, std::string source_name)
    : in_(in), source_(std::move(source_name)) {}

void Reader::fail(const std::string& message) const {
    throw ParseError(source_, record_line_, message);
}

std::optional<std::vector<std::string>> Reader::next() {
    if (at_start_) {
        // UTF-8 BOM, if present
        if (in_.peek() == 0xEF) {
            char bom[3];
            in_.read(bom, 3);
            if (in_.gcount() != 3 || bom[1] != char(0xBB) || bom[2] != char(0xBF)) {
                throw ParseError(source_, 1, "invalid byte-order mark");
            }
        }
        at_start_ = false;
    }

    // skip blank lines between records
    for (;;) {
        int c = in_.peek();
        if (c == '\n') {
            in_.get();
            ++line_;
        } else if (c == '\r') {
            in_.get();
            if (in_.peek() == '\n') in_.get();
            ++line_;
        } else {
            break;
        }
    }
    if (in_.peek() == std::istream::traits_type::eof()) return std::nullopt;

    record_line_ = line_;
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;

    for (;;) {
        int ci = in_.get();
        if (ci == std::istream::traits_type::eof()) {
            if (quoted) fail("unterminated quoted field");
            fields.push_back(std::move(field));
            return fields;
        }
        char c = static_cast<char>(ci);
        if (quoted) {
            if (c == '"') {
                if (in_.peek() == '"') {
                    in_.get();
                    field.push_back('"');
                } else {
                    quoted = false;
                }
            } else {
                if (c == '\n') ++line_;
                field.push_back(c);
            }
            continue;
        }
        switch (c) {
            case ',':
                fields.push_back(std::move(field));
                field.clear();
                break;
            case '"':
                if (field.empty()) {
                    quoted = true;
                } else {
                    field.push_back(c);  // lenient: stray quote mid-field kept literally
                }
                break;
            case '\r':
                if (in_.peek() == '\n') in_.get();
                ++line_;
                fields.push_back(std::move(field));
                return fields;
            case '\n':
                ++line_;
                fields.push_back(std::move(field));
                return fields;
            default:
                field.push_back(c);
        }
    }
}

std::string escape_field(std::string_view field) {
    bool needs_quotes = field.find_first_of(",\"\r\n") != std::string_view::npos;
    if (!needs_quotes) return std::string(field);
    std::string out;
    out.reserve(field.size() + 2);
    out.push_back('"');
    for (char c : field) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

void Writer::row(std::span<const std::string> fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) out_ << ',';
        out_ << escape_field(fields[i]);
    }
    out_ << '\n';
}

void Writer::row(std::initializer_list<std::string> fields) {
    row(std::span<const std::string>(fields.begin(), fields.size()));
}

bool expect_header(Reader& reader, std::span<const std::string> expected) {
    auto header = reader.next();
    if (!header.has_value()) return false;
    bool matches = header->size() == expected.size();
    if (matches) {
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if ((*header)[i] != expected[i]) {
                matches = false;
                break;
            }
        }
    }
    if (!matches) {
        std::string want;
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i > 0) want += ",";
            want += expected[i];
        }
        std::string got;
        for (std::size_t i = 0; i < header->size(); ++i) {
            if (i > 0) got += ",";
            got += (*header)[i];
        }
        throw SchemaError(reader.source(), reader.record_line(),
                          "schema mismatch: expected header '" + want + "', got '" + got + "'");
    }
    return true;
}

}  // namespace prestige::csv
