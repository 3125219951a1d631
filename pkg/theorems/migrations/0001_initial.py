# Generated by Django 5.2 on 2026-10-18 12:00

from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='VerificationRecord',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('created_at', models.DateTimeField(auto_now_add=True, db_index=True)),
                ('updated_at', models.DateTimeField(auto_now=True)),
                ('statement', models.CharField(db_index=True, max_length=50)),
                ('instance', models.CharField(max_length=255)),
                ('status', models.CharField(choices=[('pass', 'Pass'), ('fail', 'Fail'), ('hypothesis-unmet', 'Hypothesis Unmet')], db_index=True, max_length=20)),
                ('report', models.JSONField()),
            ],
            options={
                'verbose_name': 'Verification Record',
                'verbose_name_plural': 'Verification Records',
                'db_table': 'verification_records',
                'ordering': ['-created_at'],
                'abstract': False,
            },
        ),
    ]
