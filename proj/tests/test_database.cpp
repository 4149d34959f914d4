#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "reflat/database.hpp"
#include "support.hpp"

using namespace reflat;

namespace {

// plain bitwise CRC-32 (reflected, poly 0xEDB88320)
std::uint32_t crc32_bitwise(std::string_view s) {
    std::uint32_t c = 0xFFFFFFFFu;
    for (unsigned char b : s) {
        c ^= b;
        for (int k = 0; k < 8; ++k)
            c = (c >> 1) ^ (0xEDB88320u & (0u - (c & 1u)));
    }
    return ~c;
}

std::string tmp_path(const std::string &name) {
    return (std::filesystem::temp_directory_path() / ("reflat_test_" + name)).string();
}

ClassDatabase partial(int d, std::vector<size_t> idx) {
    ClassifyOptions o;
    o.ancestors = std::move(idx);
    return ClassDatabase::from_run(classify_reflexive(d, o));
}

} // namespace

TEST_SUITE("database") {

TEST_CASE("polygon database") {
    auto db = ClassDatabase::from_run(testsupport::run2());
    CHECK(db.dim == 2);
    CHECK(db.size() == 16);
    CHECK(db.self_dual_count() == 4);
    for (size_t i = 0; i < db.size(); ++i) {
        CHECK(db.find(db.records[i]) == i);
        CHECK(db.dual_index[db.dual_index[i]] == i);
    }
}

TEST_CASE("round trip") {
    auto db = ClassDatabase::from_run(testsupport::run2());
    const auto path = tmp_path("rt.db");
    write_db(db, path);
    auto back = read_db(path);
    CHECK(back == db);
    CHECK(back.serialize() == db.serialize());
    std::filesystem::remove(path);
}

TEST_CASE("golden bytes") {
    auto db = ClassDatabase::from_run(classify_reflexive(1));
    const std::string bytes = db.serialize();
    std::string expect("RPDB\x01\x01", 6);
    expect += std::string("\x01\0\0\0\0\0\0\0", 8);  // one record
    expect += std::string("\x01\x02\x01\xff", 4);    // segment [-1, 1]
    expect += std::string("\0\0\0\0", 4);            // its own dual
    const std::uint32_t crc = crc32_bitwise(expect);
    for (int k = 0; k < 4; ++k)
        expect += static_cast<char>(crc >> (8 * k) & 0xff);
    CHECK(bytes == expect);
    CHECK(crc == 0x84fd06c0u);
}

TEST_CASE("damaged files") {
    const std::string good = ClassDatabase::from_run(testsupport::run2()).serialize();
    for (size_t n = 0; n < good.size(); ++n)
        CHECK_THROWS_AS(ClassDatabase::deserialize(std::string_view(good).substr(0, n)), CorruptDatabase);
    std::string magic = good;
    magic[0] = 'X';
    CHECK_THROWS_AS(ClassDatabase::deserialize(magic), CorruptDatabase);
    std::string flip = good;
    flip[20] ^= 1;
    CHECK_THROWS_AS(ClassDatabase::deserialize(flip), CorruptDatabase);
    std::string ver = good;
    ver[4] = 2;
    CHECK_THROWS_AS(ClassDatabase::deserialize(ver), VersionMismatch);
    CHECK_THROWS_AS(read_db(tmp_path("does_not_exist.db")), CorruptDatabase);
}

TEST_CASE("merging") {
    const auto full = ClassDatabase::from_run(testsupport::run2());
    const size_t n = ancestor_candidates(2).size();
    std::vector<size_t> lo, hi;
    for (size_t i = 0; i < n; ++i)
        (i < n / 2 ? lo : hi).push_back(i);
    auto a = partial(2, lo), b = partial(2, hi);
    auto m = merge_dbs(a, b);
    CHECK(m.size() == 16);
    CHECK(m == full);
    CHECK(merge_dbs(full, full) == full);
    CHECK(merge_dbs(a, a) == a);
    CHECK_THROWS_AS(merge_dbs(full, ClassDatabase::from_run(classify_reflexive(1))), DimensionMismatch);
}

}
