#ifndef FOLCALC_JSONW_HPP
#define FOLCALC_JSONW_HPP

#include <cstdint>
#include <cstdio>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace folcalc {

// Minimal JSON value with deterministic serialization: object keys emit in
// sorted order and doubles print with 17 significant digits, so identical
// values always produce identical bytes.
class Json {
public:
    using Array = std::vector<Json>;
    using Object = std::map<std::string, Json>;

    Json() : v_(nullptr) {}
    Json(std::nullptr_t) : v_(nullptr) {}  // NOLINT(google-explicit-constructor)
    Json(bool b) : v_(b) {}                // NOLINT(google-explicit-constructor)
    Json(int i) : v_(static_cast<std::int64_t>(i)) {}          // NOLINT
    Json(long long i) : v_(static_cast<std::int64_t>(i)) {}    // NOLINT
    Json(std::int64_t i) : v_(i) {}                            // NOLINT
    Json(double d) : v_(d) {}                                  // NOLINT
    Json(const char* s) : v_(std::string(s)) {}                // NOLINT
    Json(std::string s) : v_(std::move(s)) {}                  // NOLINT
    Json(Array a) : v_(std::move(a)) {}                        // NOLINT
    Json(Object o) : v_(std::move(o)) {}                       // NOLINT

    static Json array() { return Json(Array{}); }
    static Json object() { return Json(Object{}); }

    Json& operator[](const std::string& key) { return std::get<Object>(v_)[key]; }
    void push_back(Json j) { std::get<Array>(v_).push_back(std::move(j)); }

    std::string dump() const {
        std::string out;
        write(out);
        return out;
    }

private:
    std::variant<std::nullptr_t, bool, std::int64_t, double, std::string, Array, Object> v_;

    static void escape(const std::string& s, std::string& out) {
        out += '"';
        for (char c : s) {
            switch (c) {
                case '"': out += "\\\""; break;
                case '\\': out += "\\\\"; break;
                case '\n': out += "\\n"; break;
                case '\t': out += "\\t"; break;
                case '\r': out += "\\r"; break;
                default:
                    if (static_cast<unsigned char>(c) < 0x20) {
                        char buf[8];
                        std::snprintf(buf, sizeof buf, "\\u%04x", c);
                        out += buf;
                    } else {
                        out += c;
                    }
            }
        }
        out += '"';
    }

    void write(std::string& out) const {
        if (std::holds_alternative<std::nullptr_t>(v_)) {
            out += "null";
        } else if (const bool* b = std::get_if<bool>(&v_)) {
            out += *b ? "true" : "false";
        } else if (const std::int64_t* i = std::get_if<std::int64_t>(&v_)) {
            out += std::to_string(*i);
        } else if (const double* d = std::get_if<double>(&v_)) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.17g", *d);
            out += buf;
        } else if (const std::string* s = std::get_if<std::string>(&v_)) {
            escape(*s, out);
        } else if (const Array* a = std::get_if<Array>(&v_)) {
            out += '[';
            for (size_t t = 0; t < a->size(); ++t) {
                if (t) out += ',';
                (*a)[t].write(out);
            }
            out += ']';
        } else if (const Object* o = std::get_if<Object>(&v_)) {
            out += '{';
            bool first = true;
            for (const auto& [k, val] : *o) {
                if (!first) out += ',';
                first = false;
                escape(k, out);
                out += ':';
                val.write(out);
            }
            out += '}';
        }
    }
};

}  // namespace folcalc

#endif
