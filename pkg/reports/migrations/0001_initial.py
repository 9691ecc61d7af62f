# Generated by Django 4.2.24 on 2026-10-18 09:12

from django.db import migrations, models
import django.db.models.deletion


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='VerificationRun',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('suite', models.CharField(choices=[('all', 'All suites'), ('matroid', 'Binary and adjacency matroids'), ('delta', 'Delta-matroids'), ('fourreg', '4-regular graphs'), ('poly', 'Polynomials')], max_length=10, verbose_name='Suite')),
                ('max_n', models.PositiveIntegerField(verbose_name='Largest size')),
                ('trials', models.PositiveIntegerField(verbose_name='Random instances per size')),
                ('seed', models.BigIntegerField(default=0, verbose_name='Seed')),
                ('passed', models.BooleanField(default=False, verbose_name='Passed')),
                ('created_at', models.DateTimeField(auto_now_add=True, verbose_name='Created At')),
            ],
            options={
                'verbose_name': 'Verification Run',
                'verbose_name_plural': 'Verification Runs',
                'ordering': ['-created_at', '-id'],
            },
        ),
        migrations.CreateModel(
            name='PropertyCheck',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('label', models.CharField(max_length=200, verbose_name='Property')),
                ('suite', models.CharField(choices=[('all', 'All suites'), ('matroid', 'Binary and adjacency matroids'), ('delta', 'Delta-matroids'), ('fourreg', '4-regular graphs'), ('poly', 'Polynomials')], max_length=10, verbose_name='Suite')),
                ('instances', models.PositiveIntegerField(default=0, verbose_name='Instances')),
                ('failures', models.PositiveIntegerField(default=0, verbose_name='Failures')),
                ('counterexample', models.JSONField(blank=True, null=True, verbose_name='Counterexample')),
                ('run', models.ForeignKey(on_delete=django.db.models.deletion.CASCADE, related_name='checks', to='reports.verificationrun', verbose_name='Run')),
            ],
            options={
                'verbose_name': 'Property Check',
                'verbose_name_plural': 'Property Checks',
                'ordering': ['run', 'id'],
                'unique_together': {('run', 'suite', 'label')},
            },
        ),
    ]
