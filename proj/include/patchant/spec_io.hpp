#ifndef PATCHANT_SPEC_IO_HPP
#define PATCHANT_SPEC_IO_HPP

// Antenna spec documents: one JSON object, lengths in mm, frequency in GHz.
//
// Numbers are read from their literal text and scaled in decimal, and
// written back as the exact decimal image of the stored SI double, so
// load(save(s)) == s holds bit for bit.

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "patchant/error.hpp"
#include "patchant/model.hpp"
#include "patchant/units.hpp"

namespace patchant {

namespace detail {

/// SAX consumer that builds a DOM and remembers each number's source text.
class RawNumberDom {
public:
    using json = nlohmann::ordered_json;

    json root;
    std::map<std::string, std::string> literals;
    std::string last_key = "<document>";

    bool null() { return put(nullptr); }
    bool boolean(bool v) { return put(v); }
    bool number_integer(json::number_integer_t v) {
        literals[child_path()] = std::to_string(v);
        return put(v);
    }
    bool number_unsigned(json::number_unsigned_t v) {
        literals[child_path()] = std::to_string(v);
        return put(v);
    }
    bool number_float(json::number_float_t v, const json::string_t& text) {
        literals[child_path()] = text;
        return put(v);
    }
    bool string(json::string_t& v) { return put(v); }
    bool binary(json::binary_t&) { return false; }

    bool start_object(std::size_t) { return open(json::object()); }
    bool start_array(std::size_t) { return open(json::array()); }
    bool end_object() { return close(); }
    bool end_array() { return close(); }

    bool key(json::string_t& k) {
        if (stack_.back().node->contains(k)) {
            last_key = join(k);
            duplicate_ = true;
            return false;
        }
        stack_.back().pending = k;
        last_key = join(k);
        return true;
    }

    bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception& ex) {
        error_ = ex.what();
        return false;
    }

    const std::string& error() const { return error_; }
    bool duplicate() const { return duplicate_; }

private:
    struct Frame {
        json* node;
        std::string path;
        std::string pending;
        std::size_t index = 0;
    };

    std::string join(const std::string& k) const {
        const std::string& base = stack_.empty() ? std::string() : stack_.back().path;
        return base.empty() ? k : base + "." + k;
    }

    std::string child_path() const {
        if (stack_.empty()) return "";
        const Frame& top = stack_.back();
        if (top.node->is_array()) {
            const std::string idx = std::to_string(top.index);
            return top.path.empty() ? idx : top.path + "." + idx;
        }
        return join(top.pending);
    }

    json* insert(json value) {
        if (stack_.empty()) {
            root = std::move(value);
            return &root;
        }
        Frame& top = stack_.back();
        if (top.node->is_array()) {
            top.node->push_back(std::move(value));
            ++top.index;
            return &top.node->back();
        }
        json& slot = (*top.node)[top.pending];
        slot = std::move(value);
        return &slot;
    }

    bool put(json value) {
        insert(std::move(value));
        return true;
    }

    bool open(json value) {
        std::string path = child_path();
        json* node = insert(std::move(value));
        stack_.push_back(Frame{node, std::move(path), {}, 0});
        return true;
    }

    bool close() {
        stack_.pop_back();
        return true;
    }

    std::vector<Frame> stack_;
    std::string error_;
    bool duplicate_ = false;
};

class DocumentReader {
public:
    using json = nlohmann::ordered_json;

    explicit DocumentReader(std::string_view text) {
        if (text.find_first_not_of(" \t\r\n") == std::string_view::npos)
            throw MalformedDocument("<document>", "empty document");
        RawNumberDom dom;
        const bool ok = json::sax_parse(text.begin(), text.end(), &dom);
        if (!ok) {
            if (dom.duplicate()) throw MalformedDocument(dom.last_key, "duplicate key");
            throw MalformedDocument(dom.last_key, dom.error().empty() ? "not valid JSON" : dom.error());
        }
        if (!dom.root.is_object())
            throw MalformedDocument("<document>", "top level must be an object");
        root_ = std::move(dom.root);
        literals_ = std::move(dom.literals);
    }

    void allow_only(const std::string& object_path, std::initializer_list<std::string_view> keys) const {
        const json& obj = object_path.empty() ? root_ : object(object_path);
        const std::set<std::string_view> allowed(keys);
        for (const auto& item : obj.items()) {
            if (!allowed.contains(item.key()))
                throw MalformedDocument(join(object_path, item.key()), "unknown key");
        }
    }

    const json& object(const std::string& path) const {
        const json& node = lookup(path);
        if (!node.is_object()) throw MalformedDocument(path, "expected an object");
        return node;
    }

    std::string text(const std::string& path) const {
        const json& node = lookup(path);
        if (!node.is_string()) throw MalformedDocument(path, "expected a string");
        return node.get<std::string>();
    }

    /// Number at `path`, scaled to SI by 10^shift.
    double number(const std::string& path, int shift = 0) const {
        const json& node = lookup(path);
        if (!node.is_number()) throw MalformedDocument(path, "expected a number");
        try {
            return parse_decimal_shifted(literals_.at(path), shift);
        } catch (const ValidationError& ex) {
            throw ValidationError(path, ex.what());
        }
    }

    std::optional<double> optional_number(const std::string& path, int shift = 0) const {
        if (!find(path)) return std::nullopt;
        return number(path, shift);
    }

private:
    static std::string join(const std::string& base, std::string_view key) {
        return base.empty() ? std::string(key) : base + "." + std::string(key);
    }

    const json* find(const std::string& path) const {
        const json* node = &root_;
        std::string_view rest = path;
        while (!rest.empty()) {
            const auto dot = rest.find('.');
            const std::string key(rest.substr(0, dot));
            if (!node->is_object() || !node->contains(key)) return nullptr;
            node = &(*node)[key];
            rest = dot == std::string_view::npos ? std::string_view{} : rest.substr(dot + 1);
        }
        return node;
    }

    const json& lookup(const std::string& path) const {
        const json* node = find(path);
        if (node == nullptr) throw MalformedDocument(path, "missing key");
        return *node;
    }

    json root_;
    std::map<std::string, std::string> literals_;
};

/// Minimal pretty printer that writes numbers from caller-supplied text.
class DocumentWriter {
public:
    DocumentWriter() { out_ << "{"; }

    DocumentWriter& begin(std::string_view key) {
        prefix(key);
        out_ << "{";
        ++depth_;
        first_ = true;
        return *this;
    }

    DocumentWriter& end() {
        --depth_;
        out_ << "\n" << indent() << "  }";
        first_ = false;
        return *this;
    }

    DocumentWriter& text(std::string_view key, const std::string& value) {
        prefix(key);
        out_ << nlohmann::json(value).dump();
        return *this;
    }

    DocumentWriter& number(std::string_view key, double value_si, int shift = 0) {
        prefix(key);
        out_ << format_decimal_shifted(value_si, shift);
        return *this;
    }

    std::string finish() {
        out_ << "\n}\n";
        return out_.str();
    }

private:
    std::string indent() const { return std::string(static_cast<std::size_t>(depth_) * 2, ' '); }

    void prefix(std::string_view key) {
        out_ << (first_ ? "\n" : ",\n") << indent() << "  " << nlohmann::json(std::string(key)).dump()
             << ": ";
        first_ = false;
    }

    std::ostringstream out_;
    int depth_ = 0;
    bool first_ = true;
};

} // namespace detail

/// Parses a spec document into SI units and validates it.
inline AntennaSpec load_antenna_spec(std::string_view text) {
    const detail::DocumentReader doc(text);
    doc.allow_only("", {"name", "frequency_ghz", "patch_mm", "substrate_mm", "relative_permittivity",
                        "loss_tangent", "mesh_wire_radius_mm", "ground_mm", "feed", "source", "ec", "ed"});
    doc.allow_only("patch_mm", {"length", "width"});
    doc.allow_only("substrate_mm", {"length", "width", "height"});
    doc.allow_only("ground_mm", {"length", "width"});
    doc.allow_only("feed", {"length_mm", "rr_ohm", "rl_ohm", "xa_ohm"});
    doc.allow_only("source", {"rg_ohm", "xg_ohm", "z0_ohm"});

    constexpr int mm = -3;
    AntennaSpec spec;
    spec.name = doc.text("name");
    const double hertz = doc.number("frequency_ghz", 9);
    if (!(hertz > 0.0)) throw ValidationError("frequency_ghz", "must be positive");
    spec.operating_frequency = Frequency::from_hz(hertz);
    spec.patch = {doc.number("patch_mm.length", mm), doc.number("patch_mm.width", mm)};
    spec.substrate.length = doc.number("substrate_mm.length", mm);
    spec.substrate.width = doc.number("substrate_mm.width", mm);
    spec.substrate.height = doc.number("substrate_mm.height", mm);
    spec.substrate.relative_permittivity = doc.number("relative_permittivity");
    spec.substrate.loss_tangent_metadata = doc.optional_number("loss_tangent");
    spec.mesh_wire_radius_metadata = doc.optional_number("mesh_wire_radius_mm", mm);
    spec.ground = {doc.number("ground_mm.length", mm), doc.number("ground_mm.width", mm)};
    spec.feed = {doc.number("feed.length_mm", mm), doc.number("feed.rr_ohm"), doc.number("feed.rl_ohm"),
                 doc.number("feed.xa_ohm")};
    spec.source = {doc.number("source.rg_ohm"), doc.number("source.xg_ohm"), doc.number("source.z0_ohm")};
    spec.conduction_efficiency = doc.optional_number("ec").value_or(1.0);
    spec.dielectric_efficiency = doc.optional_number("ed").value_or(1.0);

    validate(spec);
    return spec;
}

inline AntennaSpec load_antenna_spec_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open spec file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_antenna_spec(buf.str());
}

/// Serializes `spec` in the document schema. Efficiencies are always written.
inline std::string save_antenna_spec(const AntennaSpec& spec) {
    validate(spec);
    constexpr int mm = 3;
    detail::DocumentWriter w;
    w.text("name", spec.name);
    w.number("frequency_ghz", spec.operating_frequency.hertz(), -9);
    w.begin("patch_mm").number("length", spec.patch.length, mm).number("width", spec.patch.width, mm).end();
    w.begin("substrate_mm")
        .number("length", spec.substrate.length, mm)
        .number("width", spec.substrate.width, mm)
        .number("height", spec.substrate.height, mm)
        .end();
    w.number("relative_permittivity", spec.substrate.relative_permittivity);
    if (spec.substrate.loss_tangent_metadata) w.number("loss_tangent", *spec.substrate.loss_tangent_metadata);
    if (spec.mesh_wire_radius_metadata) w.number("mesh_wire_radius_mm", *spec.mesh_wire_radius_metadata, mm);
    w.begin("ground_mm").number("length", spec.ground.length, mm).number("width", spec.ground.width, mm).end();
    w.begin("feed")
        .number("length_mm", spec.feed.feed_length, mm)
        .number("rr_ohm", spec.feed.radiation_resistance)
        .number("rl_ohm", spec.feed.loss_resistance)
        .number("xa_ohm", spec.feed.reactance)
        .end();
    w.begin("source")
        .number("rg_ohm", spec.source.resistance)
        .number("xg_ohm", spec.source.reactance)
        .number("z0_ohm", spec.source.reference_impedance)
        .end();
    w.number("ec", spec.conduction_efficiency);
    w.number("ed", spec.dielectric_efficiency);
    return w.finish();
}

} // namespace patchant

#endif
