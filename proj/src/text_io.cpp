#include "rqmcbet/text_io.hpp"

#include <cstdio>

namespace rqmcbet {

std::string fmt9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string json_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (const char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out;
}

std::string interval_json(const Interval& iv) {
  std::string out = "{\"method\":\"";
  out += method_name(iv.method);
  out += "\",\"alpha\":" + fmt9(iv.alpha);
  out += ",\"lo\":" + fmt9(iv.lo);
  out += ",\"hi\":" + fmt9(iv.hi);
  out += ",\"half_width_preclip\":" + fmt9(iv.diag.half_width_preclip);
  out += ",\"n\":" + (iv.n > 0 ? std::to_string(iv.n) : std::string("null"));
  out += ",\"R\":" + std::to_string(iv.R);
  out += "}";
  return out;
}

}  // namespace rqmcbet
