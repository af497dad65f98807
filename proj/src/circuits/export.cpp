#include "qpalign/circuits/export.hpp"

#include "qpalign/error.hpp"

#include "json.hpp"

#include <cstdio>
#include <map>
#include <sstream>

namespace qpalign::circuits {

using nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;

std::string qubit_ref(const RegisterLayout &layout, Qubit q)
{
    for (const auto &r : layout.registers())
        if (q >= r.offset && q < r.offset + r.width)
            return r.name + "[" + std::to_string(q - r.offset) + "]";
    throw ContractViolation("qubit " + std::to_string(q) + " outside every register");
}

std::string format_angle(double angle)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", angle);
    return buf;
}

/// "ctrl(2) @ negctrl @ " for the polarity runs of `controls`.
std::string modifiers(const std::vector<Control> &controls)
{
    std::string out;
    for (std::size_t i = 0; i < controls.size();) {
        std::size_t j = i;
        while (j < controls.size() && controls[j].positive == controls[i].positive)
            ++j;
        out += controls[i].positive ? "ctrl" : "negctrl";
        if (j - i > 1)
            out += "(" + std::to_string(j - i) + ")";
        out += " @ ";
        i = j;
    }
    return out;
}

std::string gate_line(const RegisterLayout &layout, const Gate &g)
{
    std::vector<std::string> args;
    for (const Control &c : g.controls)
        args.push_back(qubit_ref(layout, c.qubit));
    for (Qubit q : g.targets)
        args.push_back(qubit_ref(layout, q));

    std::string head;
    switch (g.kind) {
    case qsim::GateKind::H:
        head = "h";
        break;
    case qsim::GateKind::X:
        head = "x";
        break;
    case qsim::GateKind::CX:
        head = "cx";
        break;
    case qsim::GateKind::MCX:
        head = modifiers(g.controls) + "x";
        break;
    case qsim::GateKind::CPhase:
        if (g.controls.empty())
            head = "p(" + format_angle(g.angle) + ")";
        else if (g.controls.size() == 1 && g.controls.front().positive)
            head = "cp(" + format_angle(g.angle) + ")";
        else
            head = modifiers(g.controls) + "p(" + format_angle(g.angle) + ")";
        break;
    case qsim::GateKind::Swap:
        head = "swap";
        break;
    }
    std::string line = head + " ";
    for (std::size_t i = 0; i < args.size(); ++i)
        line += (i ? ", " : "") + args[i];
    return line + ";";
}

std::string to_qasm(const CircuitSpec &spec)
{
    std::ostringstream os;
    os << "OPENQASM 3.0;\n";
    os << "include \"stdgates.inc\";\n";
    os << "// gates: " << spec.gate_count() << ", depth: " << spec.depth() << "\n";
    for (const auto &r : spec.layout.registers())
        if (r.width > 0)
            os << "qubit[" << r.width << "] " << r.name << ";\n";

    const auto &secs = spec.sections;
    auto emit_boundaries = [&](std::size_t i) {
        for (std::size_t k = secs.size(); k-- > 0;)
            if (secs[k].end == i && secs[k].begin < i)
                os << "// end " << secs[k].name << "\n";
        for (const Section &s : secs) {
            if (s.begin != i)
                continue;
            os << "// begin " << s.name << "\n";
            if (s.end == i)
                os << "// end " << s.name << "\n";
        }
    };
    for (std::size_t i = 0; i < spec.gates.size(); ++i) {
        emit_boundaries(i);
        os << gate_line(spec.layout, spec.gates[i]) << "\n";
    }
    emit_boundaries(spec.gates.size());
    return os.str();
}

std::string to_json(const CircuitSpec &spec)
{
    ordered_json doc;
    doc["format"] = "qpalign-circuit";
    doc["version"] = kSchemaVersion;
    doc["layout"] = ordered_json::array();
    for (const auto &r : spec.layout.registers())
        doc["layout"].push_back({{"name", r.name}, {"width", r.width}});
    doc["gates"] = ordered_json::array();
    for (const Gate &g : spec.gates) {
        ordered_json rec;
        rec["kind"] = std::string(qsim::kind_name(g.kind));
        rec["targets"] = g.targets;
        ordered_json controls = ordered_json::array();
        ordered_json polarities = ordered_json::array();
        for (const Control &c : g.controls) {
            controls.push_back(c.qubit);
            polarities.push_back(c.positive);
        }
        rec["controls"] = std::move(controls);
        rec["polarities"] = std::move(polarities);
        if (g.kind == qsim::GateKind::CPhase)
            rec["angle"] = g.angle;
        doc["gates"].push_back(std::move(rec));
    }
    ordered_json sections = ordered_json::array();
    for (const Section &s : spec.sections)
        sections.push_back({{"name", s.name}, {"begin", s.begin}, {"end", s.end}});
    doc["metadata"] = {{"gate_count", spec.gate_count()}, {"depth", spec.depth()}, {"sections", sections}};
    return doc.dump(2) + "\n";
}

CircuitSpec from_json(std::string_view text)
{
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ValidationError(std::string("circuit JSON does not parse: ") + e.what());
    }
    try {
        if (doc.at("format") != "qpalign-circuit" || doc.at("version") != kSchemaVersion)
            throw ValidationError("unsupported circuit document format/version");
        CircuitSpec spec;
        for (const auto &r : doc.at("layout"))
            spec.layout.add(r.at("name").get<std::string>(), r.at("width").get<std::size_t>());
        for (const auto &rec : doc.at("gates")) {
            Gate g;
            g.kind = qsim::kind_from_name(rec.at("kind").get<std::string>());
            g.targets = rec.at("targets").get<std::vector<Qubit>>();
            const auto controls = rec.at("controls").get<std::vector<Qubit>>();
            const auto polarities = rec.at("polarities").get<std::vector<bool>>();
            if (controls.size() != polarities.size())
                throw ValidationError("gate controls and polarities differ in length");
            for (std::size_t i = 0; i < controls.size(); ++i)
                g.controls.push_back({controls[i], polarities[i]});
            if (rec.contains("angle"))
                g.angle = rec.at("angle").get<double>();
            spec.gates.push_back(std::move(g));
        }
        if (doc.contains("metadata") && doc.at("metadata").contains("sections"))
            for (const auto &s : doc.at("metadata").at("sections"))
                spec.sections.push_back(
                    {s.at("name").get<std::string>(), s.at("begin").get<std::size_t>(), s.at("end").get<std::size_t>()});
        spec.validate();
        return spec;
    } catch (const nlohmann::json::exception &e) {
        throw ValidationError(std::string("malformed circuit JSON: ") + e.what());
    } catch (const ContractViolation &e) {
        throw ValidationError(std::string("invalid circuit: ") + e.what());
    }
}

std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

class QasmReader {
  public:
    CircuitSpec read(std::string_view text)
    {
        std::istringstream in{std::string(text)};
        std::string raw;
        std::size_t lineno = 0;
        while (std::getline(in, raw)) {
            ++lineno;
            std::string line = trim(raw);
            if (line.empty() || line.starts_with("//") || line.starts_with("OPENQASM") || line.starts_with("include"))
                continue;
            if (line.back() != ';')
                fail(lineno, "missing ';'");
            line.pop_back();
            if (line.starts_with("qubit["))
                declare(lineno, line);
            else
                spec_.gates.push_back(gate(lineno, line));
        }
        try {
            spec_.validate();
        } catch (const ContractViolation &e) {
            throw ValidationError(std::string("invalid circuit: ") + e.what());
        }
        return std::move(spec_);
    }

  private:
    [[noreturn]] static void fail(std::size_t lineno, const std::string &why)
    {
        throw ValidationError("qasm line " + std::to_string(lineno) + ": " + why);
    }

    void declare(std::size_t lineno, const std::string &line)
    {
        const auto close = line.find(']');
        if (close == std::string::npos)
            fail(lineno, "bad qubit declaration");
        const auto width = std::stoul(line.substr(6, close - 6));
        const std::string name = trim(line.substr(close + 1));
        if (name.empty())
            fail(lineno, "unnamed register");
        spec_.layout.add(name, width);
    }

    Qubit ref(std::size_t lineno, const std::string &token) const
    {
        const std::string t = trim(token);
        const auto open = t.find('[');
        if (open == std::string::npos || t.back() != ']')
            fail(lineno, "bad qubit reference '" + t + "'");
        const auto *r = spec_.layout.find(t.substr(0, open));
        if (r == nullptr)
            fail(lineno, "unknown register in '" + t + "'");
        const auto idx = std::stoul(t.substr(open + 1, t.size() - open - 2));
        if (idx >= r->width)
            fail(lineno, "index out of range in '" + t + "'");
        return (*r)[idx];
    }

    Gate gate(std::size_t lineno, std::string line) const
    {
        std::vector<bool> polarity;
        while (true) {
            const auto at = line.find('@');
            if (at == std::string::npos)
                break;
            std::string mod = trim(line.substr(0, at));
            line = trim(line.substr(at + 1));
            bool positive = true;
            if (mod.starts_with("negctrl")) {
                positive = false;
                mod = mod.substr(7);
            } else if (mod.starts_with("ctrl")) {
                mod = mod.substr(4);
            } else {
                fail(lineno, "unknown modifier '" + mod + "'");
            }
            std::size_t count = 1;
            if (!mod.empty()) {
                if (mod.front() != '(' || mod.back() != ')')
                    fail(lineno, "bad modifier argument");
                count = std::stoul(mod.substr(1, mod.size() - 2));
            }
            polarity.insert(polarity.end(), count, positive);
        }

        const auto space = line.find(' ');
        if (space == std::string::npos)
            fail(lineno, "gate without operands");
        std::string name = line.substr(0, space);
        double angle = 0.0;
        if (const auto paren = name.find('('); paren != std::string::npos) {
            if (name.back() != ')')
                fail(lineno, "bad gate parameter");
            angle = std::stod(name.substr(paren + 1, name.size() - paren - 2));
            name = name.substr(0, paren);
        }
        std::vector<Qubit> operands;
        std::stringstream args(line.substr(space + 1));
        std::string tok;
        while (std::getline(args, tok, ','))
            operands.push_back(ref(lineno, tok));

        std::size_t implicit = 0;
        if (name == "cx") {
            implicit = 1;
            name = "x";
        } else if (name == "cp") {
            implicit = 1;
            name = "p";
        }
        polarity.insert(polarity.end(), implicit, true);
        const std::size_t want_targets = name == "swap" ? 2 : 1;
        if (operands.size() != polarity.size() + want_targets)
            fail(lineno, "operand count does not match controls");
        std::vector<Control> controls;
        for (std::size_t i = 0; i < polarity.size(); ++i)
            controls.push_back({operands[i], polarity[i]});
        const Qubit target = operands[polarity.size()];

        if (name == "h" && controls.empty())
            return Gate::h(target);
        if (name == "x")
            return Gate::x(target, std::move(controls));
        if (name == "p")
            return Gate::phase(target, angle, std::move(controls));
        if (name == "swap" && controls.empty())
            return Gate::swap(target, operands.back());
        fail(lineno, "unsupported gate '" + name + "'");
    }

    CircuitSpec spec_;
};

} // namespace

ExportFormat export_format_from_name(std::string_view name)
{
    if (name == "portable-qasm")
        return ExportFormat::PortableQasm;
    if (name == "json")
        return ExportFormat::Json;
    throw ValidationError("unknown export format '" + std::string(name) + "' (expected portable-qasm or json)");
}

std::string_view export_format_name(ExportFormat f) noexcept
{
    return f == ExportFormat::Json ? "json" : "portable-qasm";
}

std::string export_circuit(const CircuitSpec &spec, ExportFormat format)
{
    spec.validate();
    return format == ExportFormat::Json ? to_json(spec) : to_qasm(spec);
}

CircuitSpec import_circuit(std::string_view text, ExportFormat format)
{
    if (format == ExportFormat::Json)
        return from_json(text);
    try {
        return QasmReader().read(text);
    } catch (const std::invalid_argument &e) {
        if (dynamic_cast<const ValidationError *>(&e) != nullptr)
            throw;
        throw ValidationError(std::string("malformed number in qasm: ") + e.what());
    } catch (const std::out_of_range &e) {
        throw ValidationError(std::string("number out of range in qasm: ") + e.what());
    }
}

} // namespace qpalign::circuits
