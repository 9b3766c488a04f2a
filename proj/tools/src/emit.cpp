#include "mordell_cli/cli.hpp"

#include <regex>
#include <sstream>

namespace mordell::cli {

namespace {

BigInt const kExactLimit = BigInt(1) << 53;

std::string csv_escape(std::string const & s)
{
    if (s.find_first_of(",\"\n\r") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::string cell_text(Json const & v)
{
    if (v.is_string())
        return v.get<std::string>();
    return v.dump();
}

bool is_table(Json const & v)
{
    if (!v.is_array())
        return false;
    for (auto const & row : v)
        if (!row.is_object())
            return false;
    return !v.empty();
}

std::string emit_csv(Json const & result)
{
    std::ostringstream os;
    if (is_table(result)) {
        std::vector<std::string> cols;
        for (auto const & [k, _] : result.front().items())
            cols.push_back(k);
        for (std::size_t i = 0; i < cols.size(); ++i)
            os << (i ? "," : "") << csv_escape(cols[i]);
        os << '\n';
        for (auto const & row : result) {
            for (std::size_t i = 0; i < cols.size(); ++i)
                os << (i ? "," : "") << csv_escape(row.contains(cols[i]) ? cell_text(row[cols[i]]) : "null");
            os << '\n';
        }
    } else if (result.is_array()) {
        os << "value\n";
        for (auto const & v : result)
            os << csv_escape(cell_text(v)) << '\n';
    } else if (result.is_object()) {
        os << "field,value\n";
        for (auto const & [k, v] : result.items())
            os << csv_escape(k) << ',' << csv_escape(cell_text(v)) << '\n';
    } else {
        os << "scalar\n" << csv_escape(cell_text(result)) << '\n';
    }
    return os.str();
}

void emit_text_value(std::ostream & os, Json const & v)
{
    if (v.is_string())
        os << v.get<std::string>();
    else
        os << v.dump();
}

std::string emit_text(Json const & result)
{
    std::ostringstream os;
    if (result.is_array()) {
        for (auto const & v : result) {
            if (v.is_object()) {
                bool first = true;
                for (auto const & [k, x] : v.items()) {
                    os << (first ? "" : " ") << k << '=';
                    emit_text_value(os, x);
                    first = false;
                }
            } else {
                emit_text_value(os, v);
            }
            os << '\n';
        }
    } else if (result.is_object()) {
        for (auto const & [k, v] : result.items()) {
            os << k << ": ";
            emit_text_value(os, v);
            os << '\n';
        }
    } else {
        emit_text_value(os, result);
        os << '\n';
    }
    return os.str();
}

std::vector<std::vector<std::string>> split_csv(std::string const & bytes)
{
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string cell;
    bool quoted = false, any = false;
    for (std::size_t i = 0; i < bytes.size(); ++i) {
        char c = bytes[i];
        if (quoted) {
            if (c == '"' && i + 1 < bytes.size() && bytes[i + 1] == '"') {
                cell += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cell += c;
            }
            continue;
        }
        if (c == '"') {
            quoted = true;
            any = true;
        } else if (c == ',') {
            row.push_back(cell);
            cell.clear();
        } else if (c == '\n') {
            row.push_back(cell);
            rows.push_back(row);
            row.clear();
            cell.clear();
            any = false;
        } else if (c != '\r') {
            cell += c;
            any = true;
        }
    }
    if (any || !row.empty()) {
        row.push_back(cell);
        rows.push_back(row);
    }
    if (quoted)
        throw UsageError("unterminated quote in CSV input");
    return rows;
}

// Strings produced by the emitters never look like exact integers, booleans
// or null, so the cell text decides the type.
Json parse_cell(std::string const & s)
{
    static std::regex const integer("-?(0|[1-9][0-9]*)");
    if (std::regex_match(s, integer)) {
        BigInt v(s);
        return json_int(v);
    }
    if (s == "true")
        return true;
    if (s == "false")
        return false;
    if (s == "null")
        return nullptr;
    if (!s.empty() && (s.front() == '[' || s.front() == '{'))
        return Json::parse(s);
    return s;
}

} // namespace

Format parse_format(std::string const & name)
{
    if (name == "json")
        return Format::json;
    if (name == "csv")
        return Format::csv;
    if (name == "text")
        return Format::text;
    throw UsageError("unknown format '" + name + "' (json, csv, text)");
}

Json json_int(BigInt const & v)
{
    if (abs(v) <= kExactLimit)
        return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

Json json_rational(Rational const & q)
{
    if (q.get_den() == 1)
        return json_int(BigInt(q.get_num()));
    return q.get_str();
}

Json json_real(std::string digits)
{
    if (digits.find_first_of(".eEni") == std::string::npos)
        digits += ".0";
    return digits;
}

std::string emit(Json const & result, Format format)
{
    switch (format) {
    case Format::json:
        return result.dump() + "\n";
    case Format::csv:
        return emit_csv(result);
    case Format::text:
        return emit_text(result);
    }
    return {};
}

Json parse(std::string const & bytes, Format format)
{
    if (format == Format::json)
        return Json::parse(bytes);
    if (format == Format::text)
        throw UsageError("text output is not machine readable");
    auto rows = split_csv(bytes);
    if (rows.empty())
        throw UsageError("empty CSV input");
    auto const & header = rows.front();
    if (header == std::vector<std::string>{"value"}) {
        Json out = Json::array();
        for (std::size_t i = 1; i < rows.size(); ++i)
            out.push_back(parse_cell(rows[i].at(0)));
        return out;
    }
    if (header == std::vector<std::string>{"scalar"})
        return parse_cell(rows.at(1).at(0));
    if (header == std::vector<std::string>{"field", "value"}) {
        Json out = Json::object();
        for (std::size_t i = 1; i < rows.size(); ++i)
            out[rows[i].at(0)] = parse_cell(rows[i].at(1));
        return out;
    }
    Json out = Json::array();
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].size() != header.size())
            throw UsageError("ragged CSV row " + std::to_string(i));
        Json row = Json::object();
        for (std::size_t c = 0; c < header.size(); ++c)
            row[header[c]] = parse_cell(rows[i][c]);
        out.push_back(row);
    }
    return out;
}

} // namespace mordell::cli
