//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SYNTHROUTE_CORPUS_PDF_TEXT_H_
#define SYNTHROUTE_CORPUS_PDF_TEXT_H_

#include <string>
#include <string_view>

namespace synthroute::corpus {

// Pulls the text layer out of a PDF: content streams are decoded
// (FlateDecode, ASCII85Decode) and the string operands of Tj, TJ, ' and "
// are collected, one line per text-positioning move. Only simple
// single-byte fonts are understood.
//
// Throws kExtractionFailed when the input is not a PDF or holds no text.
std::string extract_pdf_text(std::string_view pdf);

}  // namespace synthroute::corpus

#endif  // SYNTHROUTE_CORPUS_PDF_TEXT_H_
