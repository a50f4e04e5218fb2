#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "forge/numeric.hpp"
#include "forge/scalar.hpp"

namespace forge {

// Minimal deterministic JSON writer: insertion-ordered keys, floats always
// printed with 17 significant digits, exact rationals as "p/q" strings.
class JsonWriter {
public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();
    JsonWriter& key(const std::string& k);
    JsonWriter& value(const std::string& s);
    JsonWriter& value(const char* s) { return value(std::string(s)); }
    JsonWriter& value(bool b);
    JsonWriter& value(long v);
    JsonWriter& value(int v) { return value(static_cast<long>(v)); }
    JsonWriter& value(std::size_t v) { return value(static_cast<long>(v)); }
    JsonWriter& value(double d);
    JsonWriter& value(Cplx z);  // [re, im]
    JsonWriter& value(const Scalar& s);  // "p/q" or "p/q+r/s i"
    JsonWriter& value(const CMat2& m);   // [[z,z],[z,z]]
    JsonWriter& raw(const std::string& s);

    std::string str() const { return os_.str(); }

    static std::string format_double(double d);

private:
    void comma();
    std::ostringstream os_;
    std::vector<bool> first_;  // per nesting level
    bool pending_key_ = false;
};

// One entry of the deviation ledger: places where the replayed source
// formulas disagree with the computed ground truth, or where a convention had
// to be fixed. Reported, never silently reconciled.
struct Deviation {
    std::string code;
    std::string detail;
    double magnitude = 0;
};

void write_deviations(JsonWriter& w, const std::vector<Deviation>& devs);

}  // namespace forge
