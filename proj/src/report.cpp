#include "forge/report.hpp"

#include <cstdio>

namespace forge {

void JsonWriter::comma() {
    if (!first_.empty()) {
        if (!first_.back() && !pending_key_) os_ << ",";
        if (!pending_key_) first_.back() = false;
    }
    pending_key_ = false;
}

JsonWriter& JsonWriter::begin_object() {
    comma();
    os_ << "{";
    first_.push_back(true);
    return *this;
}

JsonWriter& JsonWriter::end_object() {
    os_ << "}";
    first_.pop_back();
    return *this;
}

JsonWriter& JsonWriter::begin_array() {
    comma();
    os_ << "[";
    first_.push_back(true);
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    os_ << "]";
    first_.pop_back();
    return *this;
}

JsonWriter& JsonWriter::key(const std::string& k) {
    comma();
    os_ << "\"" << k << "\":";
    pending_key_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(const std::string& s) {
    comma();
    os_ << "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') os_ << '\\';
        os_ << c;
    }
    os_ << "\"";
    return *this;
}

JsonWriter& JsonWriter::value(bool b) {
    comma();
    os_ << (b ? "true" : "false");
    return *this;
}

JsonWriter& JsonWriter::value(long v) {
    comma();
    os_ << v;
    return *this;
}

std::string JsonWriter::format_double(double d) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", d);
    return buf;
}

JsonWriter& JsonWriter::value(double d) {
    comma();
    os_ << format_double(d);
    return *this;
}

JsonWriter& JsonWriter::value(Cplx z) {
    begin_array();
    value(z.real());
    value(z.imag());
    return end_array();
}

JsonWriter& JsonWriter::value(const Scalar& s) {
    std::string text = s.re().get_str();
    if (s.im() != 0) {
        text += (s.im() > 0 ? "+" : "-");
        mpq_class a = abs(s.im());
        text += a.get_str() + "i";
    }
    return value(text);
}

JsonWriter& JsonWriter::value(const CMat2& m) {
    begin_array();
    for (int r = 0; r < 2; ++r) {
        begin_array();
        value(m.at(r, 0));
        value(m.at(r, 1));
        end_array();
    }
    return end_array();
}

JsonWriter& JsonWriter::raw(const std::string& s) {
    comma();
    os_ << s;
    return *this;
}

void write_deviations(JsonWriter& w, const std::vector<Deviation>& devs) {
    w.begin_array();
    for (const auto& d : devs) {
        w.begin_object();
        w.key("code").value(d.code);
        w.key("detail").value(d.detail);
        w.key("magnitude").value(d.magnitude);
        w.end_object();
    }
    w.end_array();
}

}  // namespace forge
