#include "tensor_file.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace coposit {

namespace {

// SAX handler for the fixed file schema. Number values are captured from
// their raw token text so decimals load losslessly.
struct FileSax {
    TensorFile out;
    std::string error;

    enum class State {
        Start, Root, OrderValue, DimValue, EntriesValue, InEntries, InEntry,
        IndexValue, InIndex, EntryValue, Done,
    };
    State state = State::Start;
    std::vector<int> cur_index;
    bool entry_has_index = false, entry_has_value = false;
    Rational cur_value;
    int entry_no = 0;

    bool fail(const std::string& msg) {
        if (error.empty()) error = msg;
        return false;
    }
    std::string here() const { return "entries[" + std::to_string(entry_no) + "]"; }

    bool set_number(const Rational& r) {
        switch (state) {
            case State::OrderValue:
                if (!is_integer(r)) return fail("field 'order': expected an integer");
                out.order = static_cast<int>(numerator(r));
                state = State::Root;
                return true;
            case State::DimValue:
                if (!is_integer(r)) return fail("field 'dim': expected an integer");
                out.dim = static_cast<int>(numerator(r));
                state = State::Root;
                return true;
            case State::InIndex:
                if (!is_integer(r)) return fail(here() + ".index: expected integers");
                cur_index.push_back(static_cast<int>(numerator(r)));
                return true;
            case State::EntryValue:
                cur_value = r;
                entry_has_value = true;
                state = State::InEntry;
                return true;
            default:
                return fail("unexpected number");
        }
    }

    // json_sax interface
    bool null() { return fail("unexpected null"); }
    bool boolean(bool) { return fail("unexpected boolean"); }
    bool number_integer(std::int64_t v) { return set_number(Rational(v)); }
    bool number_unsigned(std::uint64_t v) { return set_number(Rational(BigInt(v))); }
    bool number_float(double, const std::string& raw) {
        auto r = parse_rational(raw);
        if (!r) return fail("unreadable numeric literal '" + raw + "'");
        return set_number(*r);
    }
    bool string(std::string& s) {
        if (state != State::EntryValue)
            return fail("unexpected string (only entry values may be strings)");
        auto r = parse_rational(s);
        if (!r) return fail(here() + ".value: unreadable rational '" + s + "'");
        cur_value = *r;
        entry_has_value = true;
        state = State::InEntry;
        return true;
    }
    bool binary(nlohmann::json::binary_t&) { return fail("unexpected binary"); }

    bool start_object(std::size_t) {
        if (state == State::Start) {
            state = State::Root;
            return true;
        }
        if (state == State::InEntries) {
            state = State::InEntry;
            cur_index.clear();
            entry_has_index = entry_has_value = false;
            return true;
        }
        return fail("unexpected object");
    }
    bool key(std::string& k) {
        if (state == State::Root) {
            if (k == "order") state = State::OrderValue;
            else if (k == "dim") state = State::DimValue;
            else if (k == "entries") state = State::EntriesValue;
            else return fail("unknown field '" + k + "'");
            return true;
        }
        if (state == State::InEntry) {
            if (k == "index") state = State::IndexValue;
            else if (k == "value") state = State::EntryValue;
            else return fail(here() + ": unknown field '" + k + "'");
            return true;
        }
        return fail("unexpected key '" + k + "'");
    }
    bool end_object() {
        if (state == State::Root) {
            state = State::Done;
            return true;
        }
        if (state == State::InEntry) {
            if (!entry_has_index) return fail(here() + ": missing 'index'");
            if (!entry_has_value) return fail(here() + ": missing 'value'");
            out.entries.emplace_back(cur_index, cur_value);
            ++entry_no;
            state = State::InEntries;
            return true;
        }
        return fail("unexpected end of object");
    }
    bool start_array(std::size_t) {
        if (state == State::EntriesValue) {
            state = State::InEntries;
            return true;
        }
        if (state == State::IndexValue) {
            state = State::InIndex;
            cur_index.clear();
            return true;
        }
        return fail("unexpected array");
    }
    bool end_array() {
        if (state == State::InEntries) {
            state = State::Root;
            return true;
        }
        if (state == State::InIndex) {
            entry_has_index = true;
            state = State::InEntry;
            return true;
        }
        return fail("unexpected end of array");
    }
    bool parse_error(std::size_t position, const std::string&,
                     const nlohmann::json::exception& ex) {
        if (error.empty())
            error = "syntax error at byte " + std::to_string(position) + ": " + ex.what();
        return false;
    }
};

void validate(const TensorFile& f) {
    if (f.order != 2 && f.order != 3 && f.order != 4)
        throw ParseError("field 'order': must be 2, 3 or 4");
    if (f.order == 4 && f.dim != 2 && f.dim != 3)
        throw ParseError("field 'dim': must be 2 or 3 for order 4");
    if (f.order == 3 && f.dim != 2) throw ParseError("field 'dim': must be 2 for order 3");
    if (f.order == 2 && f.dim < 1) throw ParseError("field 'dim': must be >= 1 for order 2");
    for (size_t e = 0; e < f.entries.size(); ++e) {
        const auto& idx = f.entries[e].first;
        std::string at = "entries[" + std::to_string(e) + "].index";
        if (static_cast<int>(idx.size()) != f.order)
            throw ParseError(at + ": expected " + std::to_string(f.order) + " indices");
        for (int v : idx)
            if (v < 1 || v > f.dim)
                throw ParseError(at + ": index " + std::to_string(v) + " out of range 1.." +
                                 std::to_string(f.dim));
    }
}

}  // namespace

TensorFile TensorFile::parse(const std::string& text) {
    FileSax sax;
    bool ok = nlohmann::json::sax_parse(text, &sax);
    if (!ok || !sax.error.empty())
        throw ParseError(sax.error.empty() ? "malformed document" : sax.error);
    if (sax.state != FileSax::State::Done) throw ParseError("truncated document");
    validate(sax.out);
    return sax.out;
}

TensorFile TensorFile::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

std::string TensorFile::write() const {
    auto sorted = entries;
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::ostringstream out;
    out << "{\n";
    out << "  \"order\": " << order << ",\n";
    out << "  \"dim\": " << dim << ",\n";
    out << "  \"entries\": [";
    bool first = true;
    for (const auto& [idx, val] : sorted) {
        if (val == 0) continue;
        out << (first ? "\n" : ",\n") << "    {\"index\": [";
        for (size_t i = 0; i < idx.size(); ++i) out << (i ? "," : "") << idx[i];
        out << "], \"value\": \"" << rational_to_string(val) << "\"}";
        first = false;
    }
    out << "\n  ]\n}\n";
    return out.str();
}

void TensorFile::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << write();
}

SymTensor4 TensorFile::to_tensor4() const {
    if (order != 4) throw ParseError("not an order-4 tensor file");
    std::vector<std::pair<Index4, Rational>> raw;
    for (const auto& [idx, val] : entries)
        raw.push_back({{idx[0], idx[1], idx[2], idx[3]}, val});
    try {
        return SymTensor4::build(dim, raw);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

SymMatrix TensorFile::to_matrix() const {
    if (order != 2) throw ParseError("not an order-2 tensor file");
    std::vector<std::pair<Index2, Rational>> raw;
    for (const auto& [idx, val] : entries) raw.push_back({{idx[0], idx[1]}, val});
    try {
        return SymMatrix::build(dim, raw);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

Cubic2 TensorFile::to_cubic() const {
    if (order != 3 || dim != 2) throw ParseError("not an order-3 dim-2 tensor file");
    Rational v[4];  // t111, t112, t122, t222 keyed by count of index 2
    bool seen[4] = {false, false, false, false};
    for (const auto& [idx, val] : entries) {
        int twos = 0;
        for (int x : idx) twos += (x == 2);
        if (seen[twos] && v[twos] != val) throw ParseError("conflicting duplicate cubic entry");
        seen[twos] = true;
        v[twos] = val;
    }
    return Cubic2::from_exact(v[0], v[1], v[2], v[3]);
}

TensorFile TensorFile::from_tensor4(const SymTensor4& t) {
    TensorFile f;
    f.order = 4;
    f.dim = t.dim();
    auto table = SymTensor4::keys(t.dim());
    for (int p = 0; p < SymTensor4::key_count(t.dim()); ++p) {
        Rational v = t.has_exact() ? t.exact_at(p) : Rational();
        if (!t.has_exact()) {
            auto r = parse_rational(std::to_string(t.value_at(p)));
            v = r ? *r : Rational(0);
        }
        if (v == 0) continue;
        f.entries.push_back({{table[p][0], table[p][1], table[p][2], table[p][3]}, v});
    }
    return f;
}

}  // namespace coposit
