#include "testscan/lexscan.hpp"

#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cctype>
#include <string>

using namespace testscan;
using lex::SourceFileRecord;

namespace {

std::vector<std::string> segment_texts(std::string_view text) {
    std::vector<std::string> out;
    for (const auto& s : lex::segment_words(text)) out.push_back(s.text);
    return out;
}

SourceFileRecord java_record(std::string path, std::string content) {
    return SourceFileRecord::from_content(std::move(path), std::move(content));
}

} // namespace

TEST_CASE("strip blanks comments and literal bodies, preserving length") {
    CHECK(lex::strip_comments_and_strings("int x; // test here") ==
          "int x; " + std::string(12, ' '));
    CHECK(lex::strip_comments_and_strings("String s = \"@Test\";") ==
          "String s = " + std::string(7, ' ') + ";");

    const std::string in = "/* @Test */ @Test void f(){}";
    const std::string out = lex::strip_comments_and_strings(in);
    CHECK(out == "            @Test void f(){}");
    CHECK(out.size() == in.size());
}

TEST_CASE("strip keeps newlines so line structure survives") {
    const std::string in = "a /* one\ntwo\nthree */ b\n// tail\nc";
    const std::string out = lex::strip_comments_and_strings(in);
    CHECK(out.size() == in.size());
    CHECK(std::count(out.begin(), out.end(), '\n') == std::count(in.begin(), in.end(), '\n'));
    CHECK(out.find("two") == std::string::npos);
    CHECK(out.find('c') != std::string::npos);
}

TEST_CASE("strip handles escapes and char literals") {
    CHECK(lex::strip_comments_and_strings("char c = '\\'';") == "char c =     ;");
    CHECK(lex::strip_comments_and_strings("String s = \"a\\\"b\";") == "String s =       ;");
    // A slash pair inside a literal is not a comment.
    const auto out = lex::strip_comments_and_strings("String u = \"http://x\"; int y;");
    CHECK(out == "String u =           ; int y;");
}

TEST_CASE("unterminated comment or literal blanks to EOF with a warning") {
    const auto r1 = lex::strip_comments_and_strings_checked("int a; /* never closed");
    CHECK(r1.unterminated);
    CHECK(r1.text == "int a;                ");
    const auto r2 = lex::strip_comments_and_strings_checked("String s = \"open");
    CHECK(r2.unterminated);
    const auto r3 = lex::strip_comments_and_strings_checked("int a;");
    CHECK(!r3.unterminated);
}

TEST_CASE("strip is idempotent on generated inputs") {
    gen::Rng rng(11);
    for (int iter = 0; iter < 200; ++iter) {
        const std::string text = gen::scan_text(rng, 80);
        const auto once = lex::strip_comments_and_strings(text);
        CHECK(lex::strip_comments_and_strings(once) == once);
    }
}

TEST_CASE("segment_words follows camel, snake and digit rules") {
    CHECK(segment_texts("myTest") == std::vector<std::string>{"my", "Test"});
    CHECK(segment_texts("my_test") == std::vector<std::string>{"my", "test"});
    CHECK(segment_texts("fastest") == std::vector<std::string>{"fastest"});
    CHECK(segment_texts("test123") == std::vector<std::string>{"test123"});
    CHECK(segment_texts("123Test") == std::vector<std::string>{"123Test"});
    CHECK(segment_texts("XMLTest") == std::vector<std::string>{"XML", "Test"});
    CHECK(segment_texts("TESTCase") == std::vector<std::string>{"TEST", "Case"});
    CHECK(segment_texts("test.delimiter") == std::vector<std::string>{"test", "delimiter"});
    CHECK(segment_texts("") == std::vector<std::string>{});
}

TEST_CASE("segments carry offsets and partition the alphanumeric content") {
    gen::Rng rng(123);
    for (int iter = 0; iter < 300; ++iter) {
        const std::string text = gen::scan_text(rng, 40);
        const auto segments = lex::segment_words(text);
        std::string from_segments;
        std::size_t last_end = 0;
        for (const auto& seg : segments) {
            CHECK(seg.start_offset >= last_end);
            CHECK(seg.start_offset + seg.text.size() <= text.size());
            CHECK(text.substr(seg.start_offset, seg.text.size()) == seg.text);
            CHECK(!seg.text.empty());
            last_end = seg.start_offset + seg.text.size();
            from_segments += seg.text;
        }
        std::string alnum_only;
        for (char c : text) {
            if (std::isalnum(static_cast<unsigned char>(c)) ||
                static_cast<unsigned char>(c) >= 0x80)
                alnum_only += c;
        }
        CHECK(from_segments == alnum_only);
    }
}

TEST_CASE("count_test_occurrences spec examples") {
    CHECK(lex::count_test_occurrences(
              java_record("A.java", "@Test void myTest() { /* test */ }")) == 3);
    CHECK(lex::count_test_occurrences(
              java_record("A.java", "testing testsAllMethods fastest")) == 0);
    CHECK(lex::count_test_occurrences(
              java_record("A.java", "Test sentence, test sentence")) == 2);
}

TEST_CASE("counting agrees with full segmentation") {
    gen::Rng rng(5150);
    for (int iter = 0; iter < 300; ++iter) {
        const std::string text = gen::scan_text(rng);
        std::size_t via_segments = 0;
        for (const auto& seg : lex::segment_words(text)) {
            if (seg.text.size() == 4 && oracles::segment_is_test(seg.text)) ++via_segments;
        }
        CAPTURE(text);
        CHECK(lex::count_test_occurrences(java_record("A.java", text)) == via_segments);
    }
}

TEST_CASE("matching is case-insensitive on delimiter-separated words") {
    // Case transforms can move camel humps, so this property is stated over
    // delimiter-separated text where segmentation is case-stable.
    gen::Rng rng(31337);
    for (int iter = 0; iter < 200; ++iter) {
        const std::string text = gen::delimited_words(rng);
        std::string upper = text, lower = text;
        std::transform(upper.begin(), upper.end(), upper.begin(),
                       [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
        std::transform(lower.begin(), lower.end(), lower.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        const auto count = lex::count_test_occurrences(java_record("A.java", text));
        CHECK(lex::count_test_occurrences(java_record("A.java", upper)) == count);
        CHECK(lex::count_test_occurrences(java_record("A.java", lower)) == count);
    }
}

TEST_CASE("filename matching includes the extension and splits on dots") {
    CHECK(lex::filename_contains_test("FooTest.java"));
    CHECK(!lex::filename_contains_test("fastest.java"));
    CHECK(lex::filename_contains_test("test_utils.properties"));
    CHECK(lex::filename_contains_test("src/main/Test.java"));
    CHECK(!lex::filename_contains_test("src/test/Foo.java")); // basename only
}

TEST_CASE("path matching looks at every component") {
    CHECK(lex::path_contains_test("src/test/java/Foo.java"));
    CHECK(lex::path_contains_test("src/androidTest/Foo.java"));
    CHECK(!lex::path_contains_test("src/main/Foo.java"));
    CHECK(!lex::path_contains_test("attestation/service/Foo.java"));
}

TEST_CASE("filename match implies path match") {
    gen::Rng rng(777);
    static const std::vector<std::string> names = {
        "FooTest.java", "fastest.java", "test_utils.properties", "Main.java",
        "TestCase.java", "my.test.java", "latest.java"};
    static const std::vector<std::string> dirs = {"src", "test", "main", "javaTests", "x"};
    std::uniform_int_distribution<std::size_t> nd(0, names.size() - 1);
    std::uniform_int_distribution<std::size_t> dd(0, dirs.size() - 1);
    std::uniform_int_distribution<int> depth(0, 3);
    for (int iter = 0; iter < 200; ++iter) {
        std::string path;
        const int d = depth(rng);
        for (int k = 0; k < d; ++k) path += dirs[dd(rng)] + "/";
        path += names[nd(rng)];
        CAPTURE(path);
        if (lex::filename_contains_test(path)) CHECK(lex::path_contains_test(path));
    }
}

TEST_CASE("from_content builds a coherent record") {
    const std::string content = "package p;\n// test comment\nclass FooTest {\n"
                                "  String s = \"@Test literal\";\n}\n";
    const auto rec = java_record("src/test/FooTest.java", content);
    CHECK(rec.is_java);
    CHECK(rec.is_searchable);
    CHECK(rec.code_view.size() == rec.raw_content.size());
    CHECK(rec.line_count == 5);
    CHECK(std::count(rec.code_view.begin(), rec.code_view.end(), '\n') ==
          std::count(rec.raw_content.begin(), rec.raw_content.end(), '\n'));
    CHECK(rec.code_view.find("test comment") == std::string::npos);
    CHECK(rec.code_view.find("@Test literal") == std::string::npos);
    // Occurrence counting runs on raw content, so the comment and the
    // literal still count; code_view drops them for structural detection.
    CHECK(lex::count_test_occurrences(rec) == 3);

    const auto props = java_record("conf/test.properties", "mode=test\n");
    CHECK(!props.is_java);
    CHECK(props.is_searchable);
    const auto other = java_record("README.md", "test\n");
    CHECK(!other.is_searchable);
}

TEST_CASE("invalid UTF-8 bytes are replaced, length preserved") {
    std::string bad = "ab\xFFtest\x80zz";
    const auto before = bad.size();
    lex::replace_invalid_utf8(bad);
    CHECK(bad.size() == before);
    CHECK(bad == "ab?test?zz");
    std::string ok = "caf\xC3\xA9 test";
    lex::replace_invalid_utf8(ok);
    CHECK(ok == "caf\xC3\xA9 test");
    // Truncated multi-byte sequence at EOF
    std::string trunc = "x\xE2\x82";
    lex::replace_invalid_utf8(trunc);
    CHECK(trunc.size() == 3);
    CHECK(trunc[0] == 'x');
}

TEST_CASE("records survive arbitrary bytes") {
    gen::Rng rng(88);
    for (int iter = 0; iter < 100; ++iter) {
        const auto bytes = gen::raw_bytes(rng, 600);
        const auto rec = java_record("x/F.java", bytes);
        CHECK(rec.code_view.size() == rec.raw_content.size());
        CHECK(std::count(rec.code_view.begin(), rec.code_view.end(), '\n') ==
              std::count(rec.raw_content.begin(), rec.raw_content.end(), '\n'));
    }
}
