#include "knotsig/report.hpp"

#include "knotsig/errors.hpp"
#include "knotsig/skein.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace knotsig {

using nlohmann::json;

namespace {

std::string where(std::size_t index, const std::string& name, std::string_view field)
{
    std::string s = "record " + std::to_string(index);
    if (!name.empty()) s += " (\"" + name + "\")";
    if (!field.empty()) s += ": field \"" + std::string(field) + "\"";
    return s;
}

SymPoly poly_from_json(const json& j, const std::string& ctx)
{
    try {
        if (j.is_string()) return SymPoly::parse(j.get<std::string>());
        if (!j.is_array()) throw ParseError("expected a coefficient array or a polynomial string");
        std::vector<mpq_class> coeffs;
        for (std::size_t k = 0; k < j.size(); ++k) {
            const json& c = j[k];
            if (c.is_number_integer()) {
                coeffs.emplace_back(mpz_class(std::to_string(c.get<long long>())));
            } else if (c.is_string()) {
                coeffs.push_back(SymPoly::parse("[" + c.get<std::string>() + "]").coeff(0));
            } else {
                throw ParseError("coefficient " + std::to_string(k) + " is not an integer or a rational string");
            }
        }
        return SymPoly(std::move(coeffs));
    } catch (const ParseError& e) {
        throw ParseError(ctx + ": " + e.what());
    }
}

json poly_to_json(const SymPoly& p)
{
    json arr = json::array();
    for (const auto& c : p.coeffs()) {
        if (c.get_den() == 1 && c.get_num().fits_slong_p())
            arr.push_back(c.get_num().get_si());
        else
            arr.push_back(c.get_str());
    }
    return arr;
}

std::string line_col(std::string_view text, std::size_t byte)
{
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

std::vector<KnotRecord> parse_catalog(std::string_view json_text)
{
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError("catalog JSON syntax error at " + line_col(json_text, e.byte ? e.byte - 1 : 0) + ": " +
                         e.what());
    }
    if (!doc.is_array()) throw ParseError("catalog must be a JSON array of records");

    std::vector<KnotRecord> out;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const json& r = doc[i];
        if (!r.is_object()) throw ParseError(where(i, "", "") + ": expected an object");
        KnotRecord rec;
        if (!r.contains("name") || !r["name"].is_string())
            throw ParseError(where(i, "", "name") + ": missing or not a string");
        rec.name = r["name"].get<std::string>();

        if (!r.contains("braid")) throw ParseError(where(i, rec.name, "braid") + ": missing");
        try {
            const json& b = r["braid"];
            if (b.is_string()) {
                rec.braid = BraidWord::parse(b.get<std::string>());
            } else if (b.is_array()) {
                std::vector<int> letters;
                for (const json& l : b) {
                    if (!l.is_number_integer()) throw ParseError("letters must be integers");
                    letters.push_back(l.get<int>());
                }
                rec.braid = BraidWord(std::move(letters));
            } else {
                throw ParseError("expected an integer array");
            }
        } catch (const std::exception& e) {
            throw ParseError(where(i, rec.name, "braid") + ": " + e.what());
        }
        if (!rec.braid.is_knot())
            throw ParseError(where(i, rec.name, "braid") + ": closure has " +
                             std::to_string(rec.braid.components()) + " components, not a knot");

        if (r.contains("delta") && !r["delta"].is_null())
            rec.delta = poly_from_json(r["delta"], where(i, rec.name, "delta"));
        if (r.contains("p") && !r["p"].is_null()) rec.p1 = poly_from_json(r["p"], where(i, rec.name, "p"));

        try {
            cross_validate(rec);
        } catch (const Error& e) {
            throw ParseError(where(i, rec.name, "delta") + ": " + e.what());
        }
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<KnotRecord> load_catalog(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error("cannot open catalog file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_catalog(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string catalog_json(const std::vector<KnotRecord>& records)
{
    json arr = json::array();
    for (const auto& r : records) {
        json o;
        o["name"] = r.name;
        o["braid"] = r.braid.letters();
        if (r.delta) o["delta"] = poly_to_json(*r.delta);
        if (r.p1) o["p"] = poly_to_json(*r.p1);
        arr.push_back(o);
    }
    return arr.dump(2) + "\n";
}

KnotReport check_record(const KnotRecord& rec, Precision prec)
{
    KnotReport rep = check_conjecture(rec, prec);
    for (auto& row : rep.rows) {
        if (row.multiplicity > 1) continue;
        try {
            row.skein = skein_jump(make_good(rec.braid, row.root));
        } catch (const SearchExhausted& e) {
            if (!is_failure(rep.status)) rep.status = Status::search_exhausted;
            rep.note += (rep.note.empty() ? "" : "; ") + std::string(e.what());
            continue;
        }
        if (*row.skein != row.j) {
            rep.status = Status::mismatch;
            rep.note += (rep.note.empty() ? "" : "; ") + std::string("skein jump differs from signature jump");
        }
    }
    return rep;
}

bool CatalogReport::ok() const
{
    for (const auto& k : knots)
        if (is_failure(k.status)) return false;
    return true;
}

CatalogReport check_catalog(const std::vector<KnotRecord>& records, Execution exec, Precision prec)
{
    CatalogReport rep;
    rep.knots.resize(records.size());
    for_each_index(records.size(), exec, [&](std::size_t i) { rep.knots[i] = check_record(records[i], prec); });
    return rep;
}

namespace {

std::string opt(const std::optional<int>& v)
{
    return v ? std::to_string(*v) : "-";
}

}  // namespace

std::string to_tsv(const CatalogReport& rep)
{
    std::ostringstream os;
    os << "knot\troot_turn\tmultiplicity\tj\tjj\tskein\tnumeric_c\tstatus\n";
    for (const auto& k : rep.knots) {
        const std::string_view status = to_string(k.status);
        if (k.rows.empty()) os << k.name << "\t-\t-\t-\t-\t-\t-\t" << status << "\n";
        for (const auto& r : k.rows)
            os << k.name << "\t" << r.turn << "\t" << r.multiplicity << "\t" << r.j << "\t" << opt(r.jj) << "\t"
               << opt(r.skein) << "\t" << r.numeric_c.value_or("-") << "\t" << status << "\n";
    }
    os << "# verdict\t" << (rep.ok() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string to_json(const CatalogReport& rep)
{
    json knots = json::array();
    for (const auto& k : rep.knots) {
        json o;
        o["name"] = k.name;
        o["braid"] = k.braid;
        o["delta"] = k.delta;
        o["status"] = std::string(to_string(k.status));
        o["sigma_minus_one"] = k.sigma_minus_one;
        o["sigma_from_jj"] = k.sigma_from_jj ? json(*k.sigma_from_jj) : json(nullptr);
        if (!k.note.empty()) o["note"] = k.note;
        json rows = json::array();
        for (const auto& r : k.rows) {
            json row;
            row["root_turn"] = r.turn;
            row["multiplicity"] = r.multiplicity;
            row["j"] = r.j;
            row["jj"] = r.jj ? json(*r.jj) : json(nullptr);
            row["skein"] = r.skein ? json(*r.skein) : json(nullptr);
            row["numeric_c"] = r.numeric_c ? json(*r.numeric_c) : json(nullptr);
            rows.push_back(row);
        }
        o["roots"] = rows;
        knots.push_back(o);
    }
    json doc;
    doc["knots"] = knots;
    doc["verdict"] = rep.ok() ? "PASS" : "FAIL";
    return doc.dump(2) + "\n";
}

std::string to_tsv(const std::vector<TorusReport>& sweep)
{
    std::ostringstream os;
    os << "a\tb\troot\tj\tjj\tkearton\tsine_sum\tfitted\tfitted_c\tstatus\n";
    bool ok = true;
    for (const auto& t : sweep) {
        ok = ok && t.status == Status::match;
        for (const auto& r : t.rows)
            os << t.knot.a() << "\t" << t.knot.b() << "\t" << r.turn_str << "\t" << r.seifert << "\t" << r.exact_p
               << "\t" << r.kearton << "\t" << r.sine_sum << "\t" << r.fitted << "\t" << r.fitted_c << "\t"
               << to_string(t.status) << "\n";
    }
    os << "# verdict\t" << (ok ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string to_json(const std::vector<TorusReport>& sweep)
{
    json arr = json::array();
    bool ok = true;
    for (const auto& t : sweep) {
        ok = ok && t.status == Status::match;
        json o;
        o["a"] = t.knot.a();
        o["b"] = t.knot.b();
        o["status"] = std::string(to_string(t.status));
        o["sigma_minus_one"] = t.sigma_minus_one;
        if (!t.note.empty()) o["note"] = t.note;
        json rows = json::array();
        for (const auto& r : t.rows)
            rows.push_back({{"root", r.turn_str},
                            {"j", r.seifert},
                            {"jj", r.exact_p},
                            {"kearton", r.kearton},
                            {"sine_sum", r.sine_sum},
                            {"fitted", r.fitted},
                            {"fitted_c", r.fitted_c}});
        o["roots"] = rows;
        arr.push_back(o);
    }
    json doc;
    doc["torus"] = arr;
    doc["verdict"] = ok ? "PASS" : "FAIL";
    return doc.dump(2) + "\n";
}

std::string display_turn(const AlgebraicRoot& r, Precision prec)
{
    if (auto q = r.exact_turn()) return q->get_str();
    return r.turn(prec).str(20);
}

}  // namespace knotsig
