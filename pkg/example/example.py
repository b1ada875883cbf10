import pucci

translator = pucci.Translator(logger=True)

source = pucci.load_fixture('dante_it').text
for number, stages in enumerate(translator.trace(source), 1):
    for stage, output in stages.items():
        print('== paragraph', number, stage)
        print(output)

output = translator.translate(source)
reference = pucci.load_fixture('pucci_fr_1931').text
print(pucci.word_diff(reference, output).render())
scores = pucci.score_all(output, reference)
print('bleu={:.2f} chrf={:.2f} meteor={:.2f}'.format(
    scores.bleu, scores.chrf, scores.meteor))
