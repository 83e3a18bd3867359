#include "blescope/core/ingest.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "blescope/core/encoding.hpp"
#include "blescope/core/error.hpp"

namespace blescope {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

double parse_double(const std::string& s, const std::string& path, int line_no,
                    const std::string& what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(path + ":" + std::to_string(line_no) + ": malformed " + what + " value '" +
                s + "'");
  }
}

long parse_long(const std::string& s, const std::string& path, int line_no,
                const std::string& what) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(path + ":" + std::to_string(line_no) + ": malformed " + what + " value '" +
                s + "'");
  }
}

}  // namespace

Run ingest_run(const std::string& path, const IngestSchema& schema, Split split) {
  std::ifstream is(path);
  if (!is) throw Error("cannot open run file: " + path);

  std::string header;
  if (!std::getline(is, header)) throw Error(path + ": empty file");
  const auto cols = split_csv_line(header);

  int ct = -1, cphone = -1, cbrand = -1, cx = -1, cy = -1;
  std::vector<int> beacon_cols;
  for (int i = 0; i < static_cast<int>(cols.size()); ++i) {
    const std::string& name = cols[i];
    if (name == schema.time_col) ct = i;
    else if (name == schema.phone_col) cphone = i;
    else if (name == schema.brand_col) cbrand = i;
    else if (name == schema.x_col) cx = i;
    else if (name == schema.y_col) cy = i;
    else if (name.rfind(schema.beacon_prefix, 0) == 0) beacon_cols.push_back(i);
  }
  if (ct < 0 || cphone < 0 || cbrand < 0 || cx < 0 || cy < 0 || beacon_cols.empty())
    throw Error(path + ": header is missing required columns");

  const int num_beacons = static_cast<int>(beacon_cols.size());

  struct RawRow {
    long t;
    Eigen::VectorXd rssi;
    bool labeled;
    Location loc;
  };
  std::vector<RawRow> rows;
  PhoneModelId phone;
  bool phone_set = false;

  std::string line;
  int line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto cells = split_csv_line(line);
    if (static_cast<int>(cells.size()) < 5 + num_beacons)
      throw Error(path + ":" + std::to_string(line_no) + ": expected " +
                  std::to_string(5 + num_beacons) + " cells, got " +
                  std::to_string(cells.size()));

    RawRow row;
    row.t = parse_long(cells[ct], path, line_no, "timestamp");
    const int model_index =
        static_cast<int>(parse_long(cells[cphone], path, line_no, "phone"));
    const Brand brand = brand_from_string(cells[cbrand]);
    if (!phone_set) {
      phone = {model_index, brand};
      phone_set = true;
    } else if (!(phone == PhoneModelId{model_index, brand})) {
      throw Error(path + ":" + std::to_string(line_no) + ": phone changes mid-run");
    }

    row.labeled = !cells[cx].empty() && !cells[cy].empty();
    if (row.labeled) {
      row.loc.x = parse_double(cells[cx], path, line_no, "x");
      row.loc.y = parse_double(cells[cy], path, line_no, "y");
    }

    row.rssi = Eigen::VectorXd::Zero(num_beacons);
    for (int b = 0; b < num_beacons; ++b) {
      const std::string& cell = cells[beacon_cols[b]];
      if (cell.empty()) continue;  // not detected
      row.rssi[b] = shift_rssi(parse_double(cell, path, line_no, "rssi"));
    }

    if (!rows.empty() && row.t <= rows.back().t)
      throw Error(path + ":" + std::to_string(line_no) + ": non-increasing timestamp " +
                  std::to_string(row.t) + " after " + std::to_string(rows.back().t));
    if (!rows.empty() && row.labeled != rows.front().labeled)
      throw Error(path + ":" + std::to_string(line_no) +
                  ": mixed labeled/unlabeled rows in one run");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(path + ": run has no data rows");

  Run run;
  run.id = std::filesystem::path(path).stem().string();
  run.phone = phone;
  run.split = split;
  run.start_time = rows.front().t;
  run.has_labels = rows.front().labeled;

  // 1 Hz grid; gaps become all-zero seconds so dead time stays visible.
  const long total = rows.back().t - rows.front().t + 1;
  run.rssi = Eigen::MatrixXd::Zero(num_beacons, total);
  if (run.has_labels) run.locations.assign(static_cast<std::size_t>(total), Location{});
  long prev_col = -1;
  for (const RawRow& row : rows) {
    const long col = row.t - run.start_time;
    if (run.has_labels) {
      // Gap seconds inherit the previous location so labels stay defined.
      for (long c = prev_col + 1; c < col; ++c)
        run.locations[static_cast<std::size_t>(c)] =
            run.locations[static_cast<std::size_t>(std::max(prev_col, 0l))];
      run.locations[static_cast<std::size_t>(col)] = row.loc;
    }
    run.rssi.col(col) = row.rssi;
    prev_col = col;
  }
  return run;
}

void write_run_csv(const Run& run, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw Error("cannot open run file for writing: " + path);
  const int B = static_cast<int>(run.rssi.rows());
  os << "t,phone,brand,x,y";
  for (int b = 0; b < B; ++b) os << ",b" << b;
  os << "\n";
  os.precision(10);
  for (int c = 0; c < run.length(); ++c) {
    os << run.time_at(c) << "," << run.phone.index << "," << brand_name(run.phone.brand)
       << ",";
    if (run.has_labels)
      os << run.locations[static_cast<std::size_t>(c)].x << ","
         << run.locations[static_cast<std::size_t>(c)].y;
    else
      os << ",";
    for (int b = 0; b < B; ++b) {
      os << ",";
      const double v = run.rssi(b, c);
      if (v > 0.0) os << unshift_rssi(v);
    }
    os << "\n";
  }
  if (!os) throw Error("write failed: " + path);
}

}  // namespace blescope
